#include "mackey/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "mackey/finrank.hpp"
#include "mackey/socle.hpp"
#include "mackey/symfunc.hpp"

namespace mackey::verify {

namespace {

using Triple = std::tuple<Partition, Partition, Partition>;

struct TripleOrder {
  bool operator()(const Triple& a, const Triple& b) const {
    GradedOrder less;
    for (int i = 0; i < 3; ++i) {
      const Partition& x = i == 0 ? std::get<0>(a) : i == 1 ? std::get<1>(a) : std::get<2>(a);
      const Partition& y = i == 0 ? std::get<0>(b) : i == 1 ? std::get<1>(b) : std::get<2>(b);
      if (less(x, y)) return true;
      if (less(y, x)) return false;
    }
    return false;
  }
};

using TripleExpr = std::map<Triple, Integer, TripleOrder>;

void accumulate(TripleExpr& out, Triple key, const Integer& value) {
  auto& slot = out[std::move(key)];
  slot += value;
}

void drop_zeros(TripleExpr& f) {
  std::erase_if(f, [](const auto& entry) { return sgn(entry.second) == 0; });
}

std::vector<Partition> all_up_to(int max_size) { return partitions_up_to(max_size); }

class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : engine_(seed) {}
  Rational next() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    Rational q(num(engine_), den(engine_));
    q.canonicalize();
    return q;
  }
  std::vector<Rational> point(int size) {
    std::vector<Rational> out;
    for (int i = 0; i < size; ++i) out.push_back(next());
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

CheckResult result(std::string name, std::size_t checked, std::vector<std::string> failures) {
  CheckResult out{std::move(name), failures.empty(), {}};
  std::ostringstream detail;
  if (failures.empty()) {
    detail << checked << " cases";
  } else {
    detail << failures.size() << " of " << checked << " cases failed; first: " << failures.front();
  }
  out.detail = detail.str();
  return out;
}

CheckResult guarded(std::string name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const Cancelled&) {
    throw;
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "]";
}

brute::Options options_of(const Settings& settings) { return {settings.budget, settings.token}; }

}  // namespace

CheckResult coassociativity(int max_size) {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  for (const auto& lambda : all_up_to(max_size)) {
    TripleExpr left, right;
    const TensorSchurExpr delta = coproduct(lambda);
    for (const auto& [key, coeff] : delta.terms()) {
      const TensorSchurExpr first = coproduct(key.first);
      const TensorSchurExpr second = coproduct(key.second);
      for (const auto& [inner, c] : first.terms())
        accumulate(left, {inner.first, inner.second, key.second}, coeff * c);
      for (const auto& [inner, c] : second.terms())
        accumulate(right, {key.first, inner.first, inner.second}, coeff * c);
    }
    drop_zeros(left);
    drop_zeros(right);
    ++checked;
    if (left != right) failures.push_back(lambda.to_string());
  }
  return result("coassociativity |lambda|<=" + std::to_string(max_size), checked, failures);
}

CheckResult counit(int max_size) {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  const Partition empty;
  for (const auto& lambda : all_up_to(max_size)) {
    SchurExpr left, right;
    const TensorSchurExpr delta = coproduct(lambda);
    for (const auto& [key, coeff] : delta.terms()) {
      if (key.first == empty) left.add(key.second, coeff);
      if (key.second == empty) right.add(key.first, coeff);
    }
    ++checked;
    if (!(left == SchurExpr::single(lambda)) || !(right == SchurExpr::single(lambda)))
      failures.push_back(lambda.to_string());
  }
  return result("counit |lambda|<=" + std::to_string(max_size), checked, failures);
}

CheckResult lr_symmetry(int max_size) {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  for (const auto& lambda : all_up_to(max_size))
    for (const auto& mu : subpartitions(lambda))
      for (const auto& nu : partitions_of(lambda.size() - mu.size())) {
        ++checked;
        if (lr_coefficient(lambda, mu, nu) != lr_coefficient(lambda, nu, mu))
          failures.push_back(lambda.to_string() + "/" + mu.to_string() + "/" + nu.to_string());
      }
  return result("LR symmetry |lambda|<=" + std::to_string(max_size), checked, failures);
}

CheckResult product_coproduct_duality(int max_size) {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  // Every pair (mu, nu) with |mu|+|nu| <= max_size against every lambda of
  // that size, in both directions.
  for (const auto& mu : all_up_to(max_size))
    for (const auto& nu : all_up_to(max_size - mu.size())) {
      SchurExpr product = schur_product(mu, nu);
      for (const auto& lambda : partitions_of(mu.size() + nu.size())) {
        ++checked;
        if (product.coefficient(lambda) != coproduct(lambda).coefficient(mu, nu))
          failures.push_back(lambda.to_string() + " vs " + mu.to_string() + "*" + nu.to_string());
      }
    }
  return result("product/coproduct duality |lambda|<=" + std::to_string(max_size), checked, failures);
}

CheckResult evaluation_consistency(std::uint64_t seed, int points, int max_degree) {
  RationalSource source(seed);
  std::size_t checked = 0;
  std::vector<std::string> failures;
  const int variables = max_degree;
  for (int t = 0; t < points; ++t) {
    auto point = source.point(variables);
    for (const auto& mu : all_up_to(max_degree))
      for (const auto& nu : all_up_to(max_degree - mu.size())) {
        Rational expanded = 0;
        const SchurExpr product = schur_product(mu, nu);
        for (const auto& [lambda, coeff] : product.terms())
          expanded += Rational(coeff) * eval_schur(lambda, point);
        ++checked;
        if (expanded != eval_schur(mu, point) * eval_schur(nu, point))
          failures.push_back(mu.to_string() + "*" + nu.to_string() + " at point " + std::to_string(t));
      }
  }
  return result("evaluation consistency of products", checked, failures);
}

CheckResult bi_alphabet(std::uint64_t seed, int points, int max_size, int max_alphabet) {
  RationalSource source(seed);
  const auto shapes = all_up_to(max_size);
  std::size_t checked = 0;
  std::vector<std::string> failures;
  for (int a = 1; a <= max_alphabet; ++a)
    for (int b = 1; b <= max_alphabet; ++b)
      for (int t = 0; t < points; ++t) {
        auto x = source.point(a);
        auto y = source.point(b);
        std::vector<Rational> xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        std::map<Partition, Rational> sx, sy;
        for (const auto& p : shapes) {
          sx.emplace(p, eval_schur(p, x));
          sy.emplace(p, eval_schur(p, y));
        }
        for (const auto& lambda : shapes) {
          Rational expanded = 0;
          const TensorSchurExpr delta = coproduct(lambda);
          for (const auto& [key, coeff] : delta.terms())
            expanded += Rational(coeff) * sx.at(key.first) * sy.at(key.second);
          ++checked;
          if (expanded != eval_schur(lambda, xy))
            failures.push_back(lambda.to_string() + " a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
      }
  return result("bi-alphabet identity |lambda|<=" + std::to_string(max_size), checked, failures);
}

CheckResult branching_grid(int max_size, int max_alphabet) {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  for (const auto& lambda : all_up_to(max_size))
    for (int a = 1; a <= max_alphabet; ++a)
      for (int b = 1; b <= max_alphabet; ++b) {
        ++checked;
        if (!branching_identity_check(lambda, a, b))
          failures.push_back(lambda.to_string() + " a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
  return result("branching dimensions |lambda|<=" + std::to_string(max_size), checked, failures);
}

CheckResult mixed_dimension_sums(int max_total) {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  for (int p = 0; p <= max_total; ++p)
    for (int q = 0; p + q <= max_total; ++q)
      for (int n = std::max(p + q, 1); n <= max_total + 1; ++n) {
        Integer total = 0;
        for (const auto& c : decompose_mixed_tensor(p, q))
          total += c.multiplicity * dim_mixed({c.beta, c.gamma, n});
        Integer expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p + q));
        ++checked;
        if (total != expected)
          failures.push_back("p=" + std::to_string(p) + " q=" + std::to_string(q) + " n=" + std::to_string(n));
      }
  return result("mixed tensor dimension sums p+q<=" + std::to_string(max_total), checked, failures);
}

CheckResult young_schur_grid(int max_rank, int max_size, const Settings& settings) {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  const auto options = options_of(settings);
  for (int N = 1; N <= max_rank; ++N)
    for (const auto& lambda : all_up_to(max_size)) {
      auto module = brute::build_tensor_module(N, lambda.size(), 0, options);
      auto image = brute::young_project(module, lambda, Partition{}, options);
      ++checked;
      if (Integer(static_cast<unsigned long>(image.dim())) != dim_schur(lambda, N))
        failures.push_back(lambda.to_string() + " N=" + std::to_string(N) + " rank " +
                           std::to_string(image.dim()));
    }
  return result("Young symmetrizer ranks vs dim_schur", checked, failures);
}

CheckResult young_mixed_grid(int max_rank, int max_size, const Settings& settings) {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  const auto options = options_of(settings);
  for (int N = 1; N <= max_rank; ++N)
    for (const auto& lambda : all_up_to(max_size))
      for (const auto& mu : all_up_to(max_size - lambda.size())) {
        if (lambda.length() + mu.length() > N) continue;
        auto module = brute::build_tensor_module(N, lambda.size(), mu.size(), options);
        auto image = brute::young_project(module, lambda, mu, options);
        ++checked;
        Integer expected = dim_mixed({lambda, mu, N});
        if (Integer(static_cast<unsigned long>(image.dim())) != expected)
          failures.push_back("(" + lambda.to_string() + ";" + mu.to_string() + ") N=" + std::to_string(N) +
                             " rank " + std::to_string(image.dim()) + " expected " + expected.get_str());
      }
  return result("traceless Young ranks vs dim_mixed", checked, failures);
}

CheckResult socle_shadow(int N, int b, const Settings& settings) {
  const std::string name = "parabolic socle layers N=" + std::to_string(N) + " b=" + std::to_string(b);
  return guarded(name, [&] {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    const auto options = options_of(settings);
    const auto data = brute::parabolic(N, b);
    for (const auto& lambda : all_up_to(std::min(b, N - b))) {
      auto tensor = brute::build_tensor_module(N, lambda.size(), 0, options);
      auto image = brute::young_project(tensor, lambda, Partition{}, options);
      auto module = brute::restrict_to(tensor, image, settings.token);
      auto layers = brute::layer_dimensions(brute::socle_filtration_parabolic(module, data, options));
      std::vector<std::size_t> expected;
      for (int k = 0; k <= lambda.size(); ++k) {
        Integer total = 0;
        const TensorSchurExpr component = homogeneous_component(coproduct(lambda), k, Side::left);
        for (const auto& [key, coeff] : component.terms())
          total += coeff * dim_schur(key.first, N - b) * dim_schur(key.second, b);
        expected.push_back(total.get_ui());
      }
      ++checked;
      if (layers != expected)
        failures.push_back(lambda.to_string() + " got " + join(layers) + " expected " + join(expected));
    }
    return result(name, checked, failures);
  });
}

CheckResult binary_word_essential(int N, int b, int max_degree, const Settings& settings) {
  const std::string name = "binary-word filtration essential N=" + std::to_string(N) + " b=" + std::to_string(b);
  return guarded(name, [&] {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    const auto options = options_of(settings);
    const auto data = brute::parabolic(N, b);
    for (int m = 0; m <= max_degree; ++m) {
      auto module = brute::build_tensor_module(N, m, 0, options);
      auto filtration = brute::binary_word_filtration(module, b, options);
      ++checked;
      if (!brute::is_essential_filtration(module, filtration, data, options))
        failures.push_back("m=" + std::to_string(m));
    }
    return result(name, checked, failures);
  });
}

CheckResult essential_negative_case(const Settings& settings) {
  const std::string name = "line in trivial+trivial is not essential";
  return guarded(name, [&] {
    brute::ExplicitModule module(2, {brute::Generator{"zero", std::nullopt, SparseMatrix(2, 2)}},
                                 {"u", "v"});
    std::vector<SparseVector> line{SparseVector::unit(0) + SparseVector::unit(1)};
    brute::Filtration filtration{Subspace::span(2, line), Subspace::whole(2)};
    const std::vector<std::string> algebra{"zero"};
    bool essential = brute::is_essential_filtration(module, filtration, algebra, options_of(settings));
    bool whole_is_essential =
        brute::is_essential_filtration(module, brute::Filtration{Subspace::whole(2)}, algebra, options_of(settings));
    CheckResult out{name, !essential && whole_is_essential, {}};
    out.detail = std::string("line step essential=") + (essential ? "true" : "false") +
                 ", single step essential=" + (whole_is_essential ? "true" : "false");
    return out;
  });
}

CheckResult mixed_tensor_oracle(int max_total, const Settings& settings) {
  const std::string name = "mixed tensor multiplicities p+q<=" + std::to_string(max_total);
  return guarded(name, [&] {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    const auto options = options_of(settings);
    for (int p = 0; p <= max_total; ++p)
      for (int q = 0; p + q <= max_total; ++q) {
        const int n = p + q + 1;
        auto counted = brute::mixed_multiplicities(p, q, n, options);
        std::map<std::pair<Partition, Partition>, Integer> formula;
        Integer dimension_sum = 0;
        for (const auto& c : decompose_mixed_tensor(p, q)) {
          formula[{c.beta, c.gamma}] = c.multiplicity;
          dimension_sum += c.multiplicity * dim_mixed({c.beta, c.gamma, n});
        }
        const std::string where = "p=" + std::to_string(p) + " q=" + std::to_string(q);
        ++checked;
        bool same = counted.size() == formula.size();
        for (const auto& [key, count] : counted) {
          auto it = formula.find(key);
          if (it == formula.end() || it->second != Integer(static_cast<unsigned long>(count))) same = false;
        }
        if (!same) failures.push_back(where + " multiplicities");
        Integer expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(p + q));
        ++checked;
        if (dimension_sum != expected) failures.push_back(where + " dimension sum");
        // Traceless part: the r = 0 constituents.
        Integer traceless = 0;
        for (const auto& beta : partitions_of(p))
          for (const auto& gamma : partitions_of(q))
            traceless += syt_count(beta) * syt_count(gamma) * dim_mixed({beta, gamma, n});
        ++checked;
        if (traceless != Integer(static_cast<unsigned long>(brute::traceless_dimension(n, p, q, options))))
          failures.push_back(where + " traceless dimension");
      }
    return result(name, checked, failures);
  });
}

CheckResult length_against_parabolic(int max_degree, int N, int b, const Settings& settings) {
  const std::string name = "tensor_length(m,0) vs parabolic constituents N=" + std::to_string(N) +
                           " b=" + std::to_string(b);
  return guarded(name, [&] {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    const auto options = options_of(settings);
    const auto data = brute::parabolic(N, b);
    for (int m = 0; m <= max_degree; ++m) {
      auto module = brute::build_tensor_module(N, m, 0, options);
      auto filtration = brute::socle_filtration_parabolic(module, data, options);
      std::size_t constituents = 0;
      for (auto c : brute::layer_constituent_counts(module, filtration, data, settings.token)) constituents += c;
      Integer formula = tensor_length(m, 0);
      ++checked;
      if (formula != Integer(static_cast<unsigned long>(constituents)))
        failures.push_back("m=" + std::to_string(m) + " formula " + formula.get_str() + " brute " +
                           std::to_string(constituents));
    }
    return result(name, checked, failures);
  });
}

CheckResult vandermonde(int max_components, const Settings& settings) {
  const std::string name = "Vandermonde span, eigenvalues (k+1)^j";
  return guarded(name, [&] {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    RationalSource source(settings.seed);
    for (int count = 1; count <= max_components; ++count)
      for (int k = 1; k <= max_components; ++k) {
        // Components of dimension 2 inside a 2*count space, eigenvalue
        // (k+1)^j on the j-th pair of coordinates.
        const std::size_t dim = 2 * static_cast<std::size_t>(count);
        SparseMatrix h(dim, dim);
        std::vector<SparseVector> components;
        Integer t = 1;
        for (int j = 0; j < count; ++j) {
          t *= k + 1;
          h.add(2 * j, 2 * j, Rational(t));
          h.add(2 * j + 1, 2 * j + 1, Rational(t));
          Rational c0 = source.next();
          if (c0 == 0) c0 = 1;
          std::vector<SparseVector::Entry> entries{{2 * j, c0}, {2 * j + 1, source.next()}};
          components.emplace_back(std::move(entries));
        }
        ++checked;
        std::size_t span = brute::vandermonde_span(components, h, settings.token);
        if (span != static_cast<std::size_t>(count))
          failures.push_back("count=" + std::to_string(count) + " k=" + std::to_string(k));
      }
    return result(name, checked, failures);
  });
}

CheckResult weight_decomposition(int max_rank, int max_degree, const Settings& settings) {
  const std::string name = "weight decomposition is a direct sum of stable pieces";
  return guarded(name, [&] {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    const auto options = options_of(settings);
    for (int N = 1; N <= max_rank; ++N)
      for (int m = 0; m <= max_degree; ++m)
        for (int n = 0; m + n <= max_degree; ++n) {
          auto module = brute::build_tensor_module(N, m, n, options);
          auto cartan = brute::cartan_labels(N);
          auto pieces = brute::weight_decompose(module, cartan);
          std::size_t total = 0;
          bool stable = true;
          for (const auto& [weight, space] : pieces) {
            total += space.dim();
            for (std::size_t i = 0; i < cartan.size(); ++i)
              for (const auto& v : space.basis()) {
                SparseVector image = module.action(cartan[i]).apply(v);
                SparseVector expected = v;
                expected.scale(weight[i]);
                if (image != expected) stable = false;
              }
          }
          ++checked;
          if (total != module.dimension() || !stable)
            failures.push_back("N=" + std::to_string(N) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    return result(name, checked, failures);
  });
}

std::vector<CheckResult> run_suite(std::string_view suite, const Settings& settings) {
  const bool all = suite == "all";
  if (!all && suite != "hopf" && suite != "branching" && suite != "brute")
    throw std::invalid_argument("unknown suite \"" + std::string(suite) + "\"");
  std::vector<CheckResult> out;
  if (all || suite == "hopf") {
    out.push_back(coassociativity(8));
    out.push_back(counit(8));
    out.push_back(lr_symmetry(8));
    out.push_back(product_coproduct_duality(7));
    out.push_back(evaluation_consistency(settings.seed, 20, 6));
    out.push_back(bi_alphabet(settings.seed, 20, 6, 3));
  }
  if (all || suite == "branching") {
    out.push_back(branching_grid(6, 3));
    out.push_back(mixed_dimension_sums(5));
  }
  if (all || suite == "brute") {
    out.push_back(guarded("Young symmetrizer ranks vs dim_schur",
                          [&] { return young_schur_grid(4, 3, settings); }));
    out.push_back(guarded("traceless Young ranks vs dim_mixed",
                          [&] { return young_mixed_grid(4, 3, settings); }));
    for (auto [N, b] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}, std::pair{6, 3}})
      out.push_back(socle_shadow(N, b, settings));
    out.push_back(binary_word_essential(4, 2, 2, settings));
    out.push_back(binary_word_essential(6, 3, 3, settings));
    out.push_back(essential_negative_case(settings));
    out.push_back(mixed_tensor_oracle(5, settings));
    out.push_back(length_against_parabolic(3, 6, 3, settings));
    out.push_back(vandermonde(6, settings));
    out.push_back(weight_decomposition(3, 3, settings));
  }
  return out;
}

}  // namespace mackey::verify
