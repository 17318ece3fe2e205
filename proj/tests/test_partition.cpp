#include "doctest.h"

#include "mackey/partition.hpp"
#include "oracles.hpp"

using namespace mackey;

TEST_CASE("construction strips trailing zeros and rejects bad input") {
  CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(Partition({0}).empty());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition{4, 2, 1}.size() == 7);
  CHECK(Partition{4, 2, 1}.length() == 3);
  CHECK(Partition{4, 2, 1}[5] == 0);
}

TEST_CASE("text form") {
  CHECK(Partition::parse("3,1") == Partition{3, 1});
  CHECK(Partition::parse("-").empty());
  CHECK(Partition::parse("2") == Partition{2});
  CHECK(Partition{3, 1}.to_string() == "3,1");
  CHECK(Partition{}.to_string() == "-");
  for (const char* bad : {"", "3,", ",1", "a", "1,2", "3,,1", "3;1", "-1"})
    CHECK_THROWS_AS(Partition::parse(bad), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  for (const auto& lambda : oracle::all_partitions(10)) CHECK(conjugate(conjugate(lambda)) == lambda);
}

TEST_CASE("containment") {
  CHECK(contains(Partition{3, 1}, Partition{}));
  CHECK(contains(Partition{3, 1}, Partition{2, 1}));
  CHECK_FALSE(contains(Partition{3, 1}, Partition{1, 1, 1}));
}

TEST_CASE("partitions are listed by degree, larger first") {
  auto six = partitions_of(6);
  CHECK(six.size() == 11);
  CHECK(six.front() == Partition{6});
  CHECK(six.back() == Partition{1, 1, 1, 1, 1, 1});
  CHECK(partitions_up_to(4).size() == 1 + 1 + 2 + 3 + 5);
  GradedOrder less;
  CHECK(less(Partition{2}, Partition{1, 1}));
  CHECK(less(Partition{5}, Partition{1, 1, 1, 1, 1, 1}));
  auto subs = subpartitions(Partition{2, 1});
  CHECK(subs.size() == 5);
}

TEST_CASE("SYT counts by hook lengths agree with enumeration") {
  CHECK(syt_count(Partition{}) == 1);
  CHECK(syt_count(Partition{2, 1}) == 2);
  CHECK(syt_count(Partition{2, 2}) == 2);
  for (const auto& lambda : oracle::all_partitions(7)) CHECK(syt_count(lambda) == oracle::syt_enumerate(lambda));
  for (int k = 0; k <= 7; ++k) {
    Integer total = 0;
    for (const auto& lambda : partitions_of(k)) total += syt_count(lambda) * syt_count(lambda);
    CHECK(total == factorial(k));
  }
}

TEST_CASE("Schur dimensions by hook content agree with SSYT enumeration") {
  CHECK(dim_schur(Partition{}, 5) == 1);
  CHECK(dim_schur(Partition{1, 1}, 3) == 3);
  CHECK(dim_schur(Partition{2, 1}, 3) == 8);
  CHECK(dim_schur(Partition{1, 1, 1, 1}, 3) == 0);
  for (const auto& lambda : oracle::all_partitions(5))
    for (int n = 0; n <= 4; ++n) CHECK(dim_schur(lambda, n) == oracle::ssyt_count(lambda, n));
}

TEST_CASE("large counts do not overflow") {
  Partition staircase{12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
  Integer f = syt_count(staircase);
  CHECK(f > Integer("18446744073709551615"));
  CHECK(binomial(100, 50) == Integer("100891344545564193334812497256"));
}
