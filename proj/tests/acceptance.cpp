// Acceptance checks, one line per criterion.  Usage: acceptance [criterion...]
// Exit status is nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mackey/brute.hpp"
#include "mackey/finrank.hpp"
#include "mackey/socle.hpp"
#include "mackey/symfunc.hpp"
#include "mackey/verify.hpp"
#include "oracles.hpp"

using namespace mackey;

namespace {

// Runtime limits in seconds.
constexpr double kHopfSeconds = 60;
constexpr double kBranchingSeconds = 10;
constexpr double kSocleShadowSeconds = 300;
constexpr double kYoungSeconds = 120;

constexpr std::uint64_t kSeed = verify::kDefaultSeed;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::string u(std::size_t x) { return std::to_string(x); }

Rational random_rational(std::mt19937_64& engine) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  Rational q(num(engine), den(engine));
  q.canonicalize();
  return q;
}

Outcome hopf() {
  Outcome out;
  for (const auto& check : {verify::coassociativity(8), verify::counit(8), verify::lr_symmetry(8),
                            verify::product_coproduct_duality(7)})
    if (!check.passed)
      out.fail(check.name + ": " + check.detail);
    else
      out.detail += (out.detail.empty() ? "" : ", ") + check.name + " " + check.detail;
  return out;
}

Outcome bi_alphabet() {
  Outcome out;
  std::mt19937_64 engine(kSeed);
  const auto shapes = oracle::all_partitions(6);
  std::size_t checked = 0;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int t = 0; t < 20; ++t) {
        std::vector<Rational> x, y, xy;
        for (int i = 0; i < a; ++i) x.push_back(random_rational(engine));
        for (int i = 0; i < b; ++i) y.push_back(random_rational(engine));
        xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        for (const auto& lambda : shapes) {
          Rational expanded = 0;
          const TensorSchurExpr delta = coproduct(lambda);
          for (const auto& [key, c] : delta.terms())
            expanded += Rational(c) * eval_schur(key.first, x) * eval_schur(key.second, y);
          ++checked;
          if (expanded != oracle::eval_by_tableaux(lambda, xy))
            out.fail(lambda.to_string() + " at a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
      }
  if (out.passed) out.detail = u(checked) + " evaluations";
  return out;
}

Outcome branching() {
  auto check = verify::branching_grid(6, 3);
  return {check.passed, check.detail};
}

Outcome socle_structure() {
  Outcome out;
  oracle::LrOracle lr;
  std::size_t checked = 0;
  for (const auto& lambda : oracle::all_partitions(6))
    for (const Partition& mu : {Partition{}, Partition{1}, Partition{2, 1}}) {
      const std::string where = lambda.to_string() + ";" + mu.to_string();
      auto report = socle_layers(lambda, mu);
      if (report.layers.size() != static_cast<std::size_t>(lambda.size()) + 1) {
        out.fail(where + " layer count");
        continue;
      }
      for (int k = 0; k <= lambda.size(); ++k) {
        const auto& layer = report.layers[k];
        if (layer.empty()) out.fail(where + " empty layer " + std::to_string(k));
        // Every (alpha, beta) with a nonzero oracle coefficient appears once.
        std::size_t expected_terms = 0;
        for (const auto& alpha : oracle::all_partitions(k))
          if (alpha.size() == k)
            for (const auto& beta : oracle::all_partitions(lambda.size() - k))
              if (beta.size() == lambda.size() - k && lr(lambda, alpha, beta) != 0) ++expected_terms;
        if (layer.size() != expected_terms) out.fail(where + " layer " + std::to_string(k) + " term count");
        for (const auto& c : layer) {
          ++checked;
          if (c.alpha.size() != k || c.beta.size() != lambda.size() - k) out.fail(where + " homogeneity");
          if (c.mu != mu) out.fail(where + " mu not carried");
          if (c.multiplicity != lr(lambda, c.alpha, c.beta)) out.fail(where + " multiplicity");
        }
      }
      const SimpleConstituent bottom{Partition{}, lambda, mu, 1}, top{lambda, Partition{}, mu, 1};
      if (report.layers.front() != std::vector<SimpleConstituent>{bottom}) out.fail(where + " layer 0");
      if (report.layers.back() != std::vector<SimpleConstituent>{top}) out.fail(where + " top layer");
    }
  if (out.passed) out.detail = u(checked) + " constituents";
  return out;
}

Outcome socle_shadow() {
  Outcome out;
  oracle::LrOracle lr;
  std::size_t checked = 0;
  const brute::Options options{brute::budget_from_env(), nullptr};
  for (auto [N, b] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}, std::pair{6, 3}}) {
    const auto data = brute::parabolic(N, b);
    for (const auto& lambda : oracle::all_partitions(std::min(b, N - b))) {
      auto tensor = brute::build_tensor_module(N, lambda.size(), 0, options);
      auto module = brute::restrict_to(tensor, brute::young_project(tensor, lambda, Partition{}, options));
      auto layers = brute::layer_dimensions(brute::socle_filtration_parabolic(module, data, options));
      std::vector<std::size_t> expected;
      for (int k = 0; k <= lambda.size(); ++k) {
        Integer total = 0;
        for (const auto& alpha : oracle::all_partitions(k))
          for (const auto& beta : oracle::all_partitions(lambda.size() - k))
            if (alpha.size() == k && beta.size() == lambda.size() - k)
              total += lr(lambda, alpha, beta) * oracle::ssyt_count(alpha, N - b) * oracle::ssyt_count(beta, b);
        expected.push_back(total.get_ui());
      }
      ++checked;
      if (layers != expected)
        out.fail("N=" + std::to_string(N) + " b=" + std::to_string(b) + " lambda=" + lambda.to_string());
    }
  }
  if (out.passed) out.detail = u(checked) + " modules";
  return out;
}

Outcome essentiality() {
  Outcome out;
  const brute::Options options{brute::budget_from_env(), nullptr};
  std::size_t checked = 0;
  for (auto [N, b] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}, std::pair{6, 3}}) {
    const auto data = brute::parabolic(N, b);
    for (int m = 0; m <= std::min({3, b, N - b}); ++m) {
      auto module = brute::build_tensor_module(N, m, 0, options);
      ++checked;
      if (!brute::is_essential_filtration(module, brute::binary_word_filtration(module, b, options), data, options))
        out.fail("N=" + std::to_string(N) + " b=" + std::to_string(b) + " m=" + std::to_string(m));
    }
  }
  brute::ExplicitModule pair(2, {brute::Generator{"zero", std::nullopt, SparseMatrix(2, 2)}}, {"u", "v"});
  const std::vector<std::string> algebra{"zero"};
  std::vector<SparseVector> line{SparseVector::unit(0) + SparseVector::unit(1, 3)};
  if (brute::is_essential_filtration(pair, brute::Filtration{Subspace::span(2, line), Subspace::whole(2)}, algebra))
    out.fail("trivial+trivial reported essential");
  if (out.passed) out.detail = u(checked) + " positive cases, negative case rejected";
  return out;
}

Outcome mixed_tensors() {
  auto check = verify::mixed_tensor_oracle(5, verify::Settings{kSeed, brute::budget_from_env(), nullptr});
  return {check.passed, check.detail};
}

Outcome lengths() {
  Outcome out;
  if (tensor_length(1, 0) != 2) out.fail("tensor_length(1,0) = " + tensor_length(1, 0).get_str());
  std::string mismatches;
  for (int q = 0; q <= 3; ++q) {
    if (tensor_length(0, q) == 1) continue;
    // Independent count: simple gl(q+1) constituents of V^{(x)q}.
    std::size_t counted = 0;
    for (const auto& [key, mult] : brute::mixed_multiplicities(0, q, q + 1)) counted += mult;
    mismatches += (mismatches.empty() ? "" : ", ") + std::string("tensor_length(0,") + std::to_string(q) +
                  ") = " + tensor_length(0, q).get_str() + " (brute-force count " + u(counted) + ")";
  }
  if (!mismatches.empty()) out.fail(mismatches + ", expected 1");
  if (tensor_length(1, 1) != 3) out.fail("tensor_length(1,1) = " + tensor_length(1, 1).get_str());
  auto brute_check = verify::length_against_parabolic(3, 6, 3, verify::Settings{kSeed, brute::budget_from_env(), nullptr});
  if (!brute_check.passed) out.fail(brute_check.detail);
  return out;
}

Outcome young() {
  Outcome out;
  const brute::Options options{brute::budget_from_env(), nullptr};
  std::size_t checked = 0;
  for (int N = 1; N <= 4; ++N)
    for (const auto& lambda : oracle::all_partitions(3))
      for (const auto& mu : oracle::all_partitions(3 - lambda.size())) {
        if (lambda.length() + mu.length() > N) continue;
        auto module = brute::build_tensor_module(N, lambda.size(), mu.size(), options);
        const std::size_t rank = brute::young_project(module, lambda, mu, options).dim();
        Integer expected = mu.empty() ? dim_schur(lambda, N) : dim_mixed({lambda, mu, N});
        if (mu.empty() && expected != oracle::ssyt_count(lambda, N)) out.fail("dim_schur disagrees with SSYT count");
        ++checked;
        if (Integer(static_cast<unsigned long>(rank)) != expected)
          out.fail("N=" + std::to_string(N) + " (" + lambda.to_string() + ";" + mu.to_string() + ")");
      }
  if (out.passed) out.detail = u(checked) + " projections";
  return out;
}

Outcome vandermonde() {
  Outcome out;
  std::size_t checked = 0;
  for (int count = 1; count <= 6; ++count)
    for (int k = 1; k <= 6; ++k) {
      SparseMatrix h(count, count);
      std::vector<SparseVector> components;
      Integer t = 1;
      for (int j = 0; j < count; ++j) {
        t *= k + 1;
        h.add(j, j, Rational(t));
        components.push_back(SparseVector::unit(j, j + 1));
      }
      ++checked;
      if (brute::vandermonde_span(components, h) != static_cast<std::size_t>(count))
        out.fail("count=" + std::to_string(count) + " k=" + std::to_string(k));
    }
  if (out.passed) out.detail = u(checked) + " spans";
  return out;
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> body;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "Hopf suite", kHopfSeconds, hopf},
      {2, "bi-alphabet identity", 0, bi_alphabet},
      {3, "branching dimensions", kBranchingSeconds, branching},
      {4, "socle structure", 0, socle_structure},
      {5, "finite-rank socle shadow", kSocleShadowSeconds, socle_shadow},
      {6, "essentiality shadow", 0, essentiality},
      {7, "mixed-tensor oracle", 0, mixed_tensors},
      {8, "length values", 0, lengths},
      {9, "Young/Weyl agreement", kYoungSeconds, young},
      {10, "Vandermonde span", 0, vandermonde},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_passed = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.number) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds)
      outcome.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.number << " [" << c.title << "]: " << (outcome.passed ? "PASS" : "FAIL") << " ("
         << outcome.detail << "; " << seconds << " s)";
    std::cout << line.str() << std::endl;
    all_passed = all_passed && outcome.passed;
  }
  return all_passed ? 0 : 1;
}
