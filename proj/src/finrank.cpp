#include "mackey/finrank.hpp"

#include <string>

#include "mackey/symfunc.hpp"

namespace mackey {

std::vector<int> mixed_highest_weight(const MixedWeight& w) {
  if (w.rank <= 0) throw std::invalid_argument("rank must be positive");
  if (w.beta.length() + w.gamma.length() > w.rank)
    throw RankTooSmall("parts(" + w.beta.to_string() + ") + parts(" + w.gamma.to_string() +
                       ") exceeds rank " + std::to_string(w.rank));
  std::vector<int> weight(static_cast<std::size_t>(w.rank), 0);
  for (int i = 0; i < w.beta.length(); ++i) weight[i] = w.beta[i];
  for (int i = 0; i < w.gamma.length(); ++i) weight[w.rank - 1 - i] = -w.gamma[i];
  return weight;
}

Integer weyl_dimension(std::span<const int> highest_weight) {
  const std::size_t n = highest_weight.size();
  Integer numerator = 1;
  Integer denominator = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long gap = static_cast<long>(highest_weight[i]) - highest_weight[j];
      if (gap < 0) throw std::invalid_argument("weight is not dominant");
      numerator *= gap + static_cast<long>(j - i);
      denominator *= static_cast<long>(j - i);
    }
  Integer quotient;
  Integer remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (sgn(remainder) != 0) throw std::logic_error("Weyl dimension quotient is not integral");
  return quotient;
}

Integer dim_mixed(const MixedWeight& w) {
  auto weight = mixed_highest_weight(w);
  return weyl_dimension(weight);
}

bool branching_identity_check(const Partition& lambda, int a, int b) {
  Integer restricted = 0;
  const TensorSchurExpr delta = coproduct(lambda);
  for (const auto& [key, coeff] : delta.terms())
    restricted += coeff * dim_schur(key.first, a) * dim_schur(key.second, b);
  return restricted == dim_schur(lambda, a + b);
}

}  // namespace mackey
