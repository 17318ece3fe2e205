#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mackey/brute.hpp"

namespace mackey::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Settings {
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = brute::kDefaultBudget;
  const CancellationToken* token = nullptr;
};

// Hopf structure of Sym.
CheckResult coassociativity(int max_size);
CheckResult counit(int max_size);
CheckResult lr_symmetry(int max_size);
CheckResult product_coproduct_duality(int max_size);
/// s_mu s_nu evaluated term by term against the product of evaluations.
CheckResult evaluation_consistency(std::uint64_t seed, int points, int max_degree);
/// s_lambda(x, y) against sum c^lambda_{mu,nu} s_mu(x) s_nu(y).
CheckResult bi_alphabet(std::uint64_t seed, int points, int max_size, int max_alphabet);

// Dimension identities.
CheckResult branching_grid(int max_size, int max_alphabet);
CheckResult mixed_dimension_sums(int max_total);

// Finite-rank checks against the brute-force engine.
CheckResult young_schur_grid(int max_rank, int max_size, const Settings& settings);
CheckResult young_mixed_grid(int max_rank, int max_size, const Settings& settings);
/// Parabolic socle filtration of S_lambda(C^N*) against the branching of
/// Delta(lambda), layer by layer.
CheckResult socle_shadow(int N, int b, const Settings& settings);
CheckResult binary_word_essential(int N, int b, int max_degree, const Settings& settings);
/// trivial (+) trivial over the zero algebra with a line as first step.
CheckResult essential_negative_case(const Settings& settings);
/// decompose_mixed_tensor against counted highest weight vectors and traceless
/// dimensions at rank p+q+1.
CheckResult mixed_tensor_oracle(int max_total, const Settings& settings);
/// tensor_length(m, 0) against Levi constituents of the parabolic socle
/// filtration of (C^N*)^{(x)m}.
CheckResult length_against_parabolic(int max_degree, int N, int b, const Settings& settings);
CheckResult vandermonde(int max_components, const Settings& settings);
CheckResult weight_decomposition(int max_rank, int max_degree, const Settings& settings);

/// Suites: "hopf", "branching", "brute", "all".  Throws std::invalid_argument
/// for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, const Settings& settings);

}  // namespace mackey::verify
