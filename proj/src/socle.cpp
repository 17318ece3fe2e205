#include "mackey/socle.hpp"

#include <stdexcept>
#include <string>

#include "mackey/symfunc.hpp"

namespace mackey {

SocleReport socle_layers(const Partition& lambda, const Partition& mu) {
  SocleReport report{lambda, mu, {}};
  const TensorSchurExpr delta = coproduct(lambda);
  for (int k = 0; k <= lambda.size(); ++k) {
    std::vector<SimpleConstituent> layer;
    const TensorSchurExpr component = homogeneous_component(delta, k, Side::left);
    for (const auto& [key, coeff] : component.terms())
      layer.push_back({key.first, key.second, mu, coeff});
    report.layers.push_back(std::move(layer));
  }
  return report;
}

Integer simple_length(const Partition& lambda, const Partition& mu) {
  Integer total = 0;
  for (const auto& layer : socle_layers(lambda, mu).layers)
    for (const auto& constituent : layer) total += constituent.multiplicity;
  return total;
}

std::vector<MixedConstituent> decompose_mixed_tensor(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("tensor degrees must be nonnegative");
  std::vector<MixedConstituent> out;
  for (int r = 0; r <= std::min(p, q); ++r) {
    const Integer pairings = binomial(p, r) * binomial(q, r) * factorial(r);
    for (const auto& beta : partitions_of(p - r))
      for (const auto& gamma : partitions_of(q - r))
        out.push_back({beta, gamma, pairings * syt_count(beta) * syt_count(gamma)});
  }
  return out;
}

Integer tensor_length(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("tensor degrees must be nonnegative");
  Integer total = 0;
  for (int top = 0; top <= m; ++top) {
    // (V*/V_*)^{(x)top} splits into f_lambda copies of each Schur piece; each
    // piece tensored with a simple constituent of the V_* (x) V part is simple.
    Integer schur_pieces = 0;
    for (const auto& lambda : partitions_of(top)) schur_pieces += syt_count(lambda);
    Integer lower = 0;
    for (const auto& c : decompose_mixed_tensor(m - top, n)) lower += c.multiplicity;
    total += binomial(m, top) * schur_pieces * lower;
  }
  return total;
}

std::vector<BinaryWord> filtration_words(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("word length and bound must be nonnegative");
  if (k > m)
    throw std::invalid_argument("filtration index " + std::to_string(k) + " exceeds word length " +
                                std::to_string(m));
  std::vector<BinaryWord> out;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    BinaryWord word(static_cast<std::size_t>(m));
    int ones = 0;
    for (int i = 0; i < m; ++i) {
      word[i] = static_cast<std::uint8_t>((bits >> (m - 1 - i)) & 1U);
      ones += word[i];
    }
    if (ones <= k) out.push_back(std::move(word));
  }
  return out;
}

}  // namespace mackey
