#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "mackey/partition.hpp"

namespace mackey {

/// Thrown when parts(beta) + parts(gamma) exceeds the rank: the traceless
/// mixed-tensor simple does not exist there.
class RankTooSmall : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Bipartition label of a simple gl(n)-module of traceless mixed tensors.
struct MixedWeight {
  Partition beta;
  Partition gamma;
  int rank = 0;
};

/// (beta_1, ..., beta_s, 0, ..., 0, -gamma_t, ..., -gamma_1).
std::vector<int> mixed_highest_weight(const MixedWeight& w);

/// Weyl dimension formula for a dominant weight of gl(n).
Integer weyl_dimension(std::span<const int> highest_weight);

/// Dimension of the irreducible gl(n)-module V_{beta,gamma}.  The value is
/// symmetric in beta and gamma (the two modules are dual), so either
/// labeling convention gives the same number.
Integer dim_mixed(const MixedWeight& w);

/// dim_schur(lambda, a+b) == sum c^lambda_{mu,nu} dim_schur(mu,a) dim_schur(nu,b)
bool branching_identity_check(const Partition& lambda, int a, int b);

}  // namespace mackey
