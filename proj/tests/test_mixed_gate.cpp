// The closed-form multiplicities of decompose_mixed_tensor are only trusted
// once they reproduce the brute-force counts below.

#include "doctest.h"

#include "mackey/brute.hpp"
#include "mackey/finrank.hpp"
#include "mackey/socle.hpp"

using namespace mackey;

TEST_CASE("closed-form mixed multiplicities match counted highest weight vectors") {
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; p + q <= 5; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      const int n = p + q + 1;
      auto counted = brute::mixed_multiplicities(p, q, n);
      auto formula = decompose_mixed_tensor(p, q);
      CHECK(counted.size() == formula.size());
      for (const auto& c : formula) {
        auto it = counted.find({c.beta, c.gamma});
        REQUIRE(it != counted.end());
        CHECK(Integer(static_cast<unsigned long>(it->second)) == c.multiplicity);
      }
    }
}

TEST_CASE("contraction kernels carry the r = 0 constituents") {
  // C^4* (x) C^4: kernel of the single contraction is the adjoint, the image
  // is the trivial module.
  CHECK(brute::traceless_dimension(4, 1, 1) == 15);
  CHECK(dim_mixed({Partition{1}, Partition{1}, 4}) == 15);
  // C^5* (x) C^5* (x) C^5 at rank 5.
  Integer traceless = 0;
  for (const auto& c : decompose_mixed_tensor(2, 1))
    if (c.beta.size() == 2) traceless += c.multiplicity * dim_mixed({c.beta, c.gamma, 5});
  CHECK(traceless == Integer(static_cast<unsigned long>(brute::traceless_dimension(5, 2, 1))));
}

TEST_CASE("tensor_length(m, 0) matches parabolic constituents at stable rank") {
  for (int m = 0; m <= 4; ++m) {
    CAPTURE(m);
    const int N = 2 * std::max(m, 1);
    auto module = brute::build_tensor_module(N, m, 0);
    auto data = brute::parabolic(N, N / 2);
    auto filtration = brute::socle_filtration_parabolic(module, data);
    std::size_t constituents = 0;
    for (auto c : brute::layer_constituent_counts(module, filtration, data)) constituents += c;
    CHECK(tensor_length(m, 0) == Integer(static_cast<unsigned long>(constituents)));
  }
}
