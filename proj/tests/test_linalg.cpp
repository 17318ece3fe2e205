#include "doctest.h"

#include "mackey/linalg.hpp"

using namespace mackey;

namespace {

SparseVector vec(std::initializer_list<Rational> values) {
  std::vector<Rational> dense(values);
  return SparseVector::from_dense(dense);
}

}  // namespace

TEST_CASE("sparse vectors") {
  SparseVector v({{3, Rational(2)}, {1, Rational(1)}, {3, Rational(-2)}, {0, Rational(0)}});
  CHECK(v.nonzeros() == 1);
  CHECK(v.at(1) == 1);
  CHECK(v.at(3) == 0);
  SparseVector w = SparseVector::unit(1, 5);
  w.axpy(Rational(-5), v);
  CHECK(w.empty());
  CHECK((vec({1, 2}) + vec({1, -2})) == vec({2, 0}));
}

TEST_CASE("matrix arithmetic") {
  auto a = SparseMatrix::from_dense({{0, 1}, {0, 0}});
  auto b = SparseMatrix::from_dense({{0, 0}, {1, 0}});
  CHECK(commutator(a, b) == SparseMatrix::from_dense({{1, 0}, {0, -1}}));
  CHECK((a * b).trace() == 1);
  CHECK((a + b - b) == a);
  CHECK(a.scaled(3).at(0, 1) == 3);
  CHECK(SparseMatrix::identity(3).is_diagonal());
  CHECK_FALSE(a.is_diagonal());
  CHECK(SparseMatrix(2, 2).is_zero());
}

TEST_CASE("subspaces in reduced echelon form") {
  std::vector<SparseVector> gens{vec({1, 1, 0}), vec({2, 2, 0}), vec({0, 1, 1})};
  auto s = Subspace::span(3, gens);
  CHECK(s.dim() == 2);
  CHECK(s.contains(vec({1, 2, 1})));
  CHECK_FALSE(s.contains(vec({0, 0, 1})));
  auto t = Subspace::span(3, std::vector<SparseVector>{vec({0, 1, 1}), vec({1, 0, -1})});
  CHECK(s == t);
  auto coords = s.coordinates(vec({3, 5, 2}));
  CHECK(s.lift(coords) == vec({3, 5, 2}));
  auto line = Subspace::span(3, std::vector<SparseVector>{vec({0, 0, 1})});
  CHECK(sum(s, line).dim() == 3);
  CHECK(intersect(s, line).dim() == 0);
  CHECK(intersect(s, Subspace::whole(3)) == s);
  CHECK(Subspace::whole(3).contains(s));
}

TEST_CASE("kernels, preimages, ranks and determinants") {
  std::vector<SparseVector> images{vec({1, 0}), vec({0, 1}), vec({1, 1})};
  auto kernel = kernel_of_images(images, 2);
  REQUIRE(kernel.size() == 1);
  CHECK(kernel[0].at(0) == kernel[0].at(1));
  CHECK(kernel[0].at(2) == -kernel[0].at(0));

  auto nilpotent = SparseMatrix::from_dense({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  const SparseMatrix* ops[] = {&nilpotent};
  auto invariants = preimage(Subspace::whole(3), ops, Subspace(3));
  CHECK(invariants.dim() == 1);
  CHECK(preimage(Subspace::whole(3), ops, invariants).dim() == 2);

  CHECK(rank(nilpotent) == 2);
  CHECK(determinant({{2, 1}, {1, 1}}) == 1);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("cancellation") {
  CancellationToken token;
  CancellationToken copy = token;
  token.cancel();
  CHECK(copy.cancelled());
  CHECK_THROWS_AS(copy.check(), Cancelled);
  std::vector<SparseVector> gens{vec({1, 0}), vec({0, 1})};
  CHECK_THROWS_AS(Subspace::span(2, gens, &token), Cancelled);
}
