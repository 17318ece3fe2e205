#pragma once

#include <cstdint>
#include <vector>

#include "mackey/partition.hpp"

namespace mackey {

/// (V*/V_*)_alpha (x) V_{beta,mu}, counted multiplicity times.
struct SimpleConstituent {
  Partition alpha;
  Partition beta;
  Partition mu;
  Integer multiplicity;

  friend bool operator==(const SimpleConstituent&, const SimpleConstituent&) = default;
};

/// Socle filtration of W_{lambda,mu} over the Mackey Lie algebra.  layers[0]
/// is the socle; layers[k] holds the constituents with |alpha| = k.
struct SocleReport {
  Partition lambda;
  Partition mu;
  std::vector<std::vector<SimpleConstituent>> layers;

  friend bool operator==(const SocleReport&, const SocleReport&) = default;
};

SocleReport socle_layers(const Partition& lambda, const Partition& mu);

/// Length of W_{lambda,mu} over the Mackey Lie algebra: sum of all c^lambda_{alpha,beta}.
Integer simple_length(const Partition& lambda, const Partition& mu);

/// Simple constituent V_{beta,gamma} of V_*^{(x)p} (x) V^{(x)q}; beta sits on the
/// V_* side.
struct MixedConstituent {
  Partition beta;
  Partition gamma;
  Integer multiplicity;

  friend bool operator==(const MixedConstituent&, const MixedConstituent&) = default;
};

/// Filtration of V_*^{(x)p} (x) V^{(x)q} by simples.  For r contractions the
/// multiplicity of V_{beta,gamma} (|beta| = p-r, |gamma| = q-r) is
/// C(p,r) C(q,r) r! f_beta f_gamma.  This closed form is checked against the
/// brute-force engine in the test suite.
std::vector<MixedConstituent> decompose_mixed_tensor(int p, int q);

/// Length of (V*)^{(x)m} (x) V^{(x)n} over the Mackey Lie algebra.
Integer tensor_length(int m, int n);

using BinaryWord = std::vector<std::uint8_t>;

/// Binary words r of length m with |r| <= k; r_i = 1 marks a tensorand in V*,
/// r_i = 0 one in V_*.  Lexicographic order.
std::vector<BinaryWord> filtration_words(int m, int k);

}  // namespace mackey
