#include "doctest.h"

#include <random>
#include <thread>

#include "mackey/symfunc.hpp"
#include "oracles.hpp"

using namespace mackey;

namespace {

TensorSchurExpr expr(std::initializer_list<std::tuple<Partition, Partition, int>> terms) {
  TensorSchurExpr out;
  for (const auto& [a, b, c] : terms) out.add(a, b, c);
  return out;
}

}  // namespace

TEST_CASE("expressions never store zero coefficients") {
  SchurExpr f;
  f.add(Partition{2}, 3);
  f.add(Partition{2}, -3);
  CHECK(f.is_zero());
  f.add(Partition{1}, 0);
  CHECK(f.terms().empty());
  TensorSchurExpr g;
  g.add(Partition{1}, Partition{}, 2);
  g.add(Partition{1}, Partition{}, -2);
  CHECK(g.is_zero());
}

TEST_CASE("LR coefficients") {
  CHECK(lr_coefficient(Partition{2, 1}, Partition{}, Partition{2, 1}) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{2}) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1}) == 0);
  CHECK(lr_coefficient(Partition{3, 1}, Partition{1, 1, 1}, Partition{1}) == 0);
}

TEST_CASE("LR coefficients agree with the monomial-expansion oracle") {
  oracle::LrOracle lr;
  for (const auto& lambda : oracle::all_partitions(6))
    for (const auto& mu : oracle::all_partitions(lambda.size()))
      for (const auto& nu : partitions_of(lambda.size() - mu.size()))
        CHECK(lr_coefficient(lambda, mu, nu) == lr(lambda, mu, nu));
}

TEST_CASE("products") {
  CHECK(schur_product(Partition{}, Partition{2, 1}) == SchurExpr::single(Partition{2, 1}));
  SchurExpr pieri;
  pieri.add(Partition{2}, 1);
  pieri.add(Partition{1, 1}, 1);
  CHECK(schur_product(Partition{1}, Partition{1}) == pieri);
  SchurExpr mixed;
  mixed.add(Partition{3, 1}, 1);
  mixed.add(Partition{2, 1, 1}, 1);
  CHECK(schur_product(Partition{2}, Partition{1, 1}) == mixed);
  for (const auto& [lambda, coeff] : schur_product(Partition{2, 1}, Partition{2}).terms()) CHECK(lambda.size() == 5);
}

TEST_CASE("coproducts") {
  CHECK(coproduct(Partition{}) == expr({{Partition{}, Partition{}, 1}}));
  CHECK(coproduct(Partition{1}) == expr({{Partition{1}, Partition{}, 1}, {Partition{}, Partition{1}, 1}}));
  auto delta = coproduct(Partition{2, 1});
  CHECK(delta == expr({{Partition{2, 1}, Partition{}, 1},
                       {Partition{2}, Partition{1}, 1},
                       {Partition{1, 1}, Partition{1}, 1},
                       {Partition{1}, Partition{2}, 1},
                       {Partition{1}, Partition{1, 1}, 1},
                       {Partition{}, Partition{2, 1}, 1}}));
  CHECK(homogeneous_component(coproduct(Partition{1}), 0, Side::left) == expr({{Partition{}, Partition{1}, 1}}));
  CHECK(homogeneous_component(delta, 1, Side::left) ==
        expr({{Partition{1}, Partition{2}, 1}, {Partition{1}, Partition{1, 1}, 1}}));
  CHECK(homogeneous_component(delta, 3, Side::left) == expr({{Partition{2, 1}, Partition{}, 1}}));
  CHECK(homogeneous_component(delta, 3, Side::right) == expr({{Partition{}, Partition{2, 1}, 1}}));
}

TEST_CASE("evaluation") {
  std::vector<Rational> point{2, 3};
  CHECK(eval_schur(Partition{}, point) == 1);
  CHECK(eval_schur(Partition{1}, point) == 5);
  CHECK(eval_schur(Partition{1, 1}, point) == 6);
  CHECK(eval_schur(Partition{1, 1, 1}, point) == 0);
  std::mt19937_64 engine(7);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (const auto& lambda : oracle::all_partitions(5))
    for (int n = 0; n <= 4; ++n) {
      std::vector<Rational> x;
      for (int i = 0; i < n; ++i) {
        Rational q(num(engine), den(engine));
        q.canonicalize();
        x.push_back(q);
      }
      CHECK(eval_schur(lambda, x) == oracle::eval_by_tableaux(lambda, x));
    }
}

TEST_CASE("the LR cache is safe under concurrent use") {
  const auto shapes = partitions_of(7);
  std::vector<std::vector<Integer>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (const auto& lambda : shapes)
        for (const auto& mu : subpartitions(lambda))
          for (const auto& nu : partitions_of(lambda.size() - mu.size()))
            seen[t].push_back(lr_coefficient(lambda, mu, nu));
    });
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) CHECK(seen[t] == seen[0]);
  CHECK(lr_cache_size() > 0);
}
