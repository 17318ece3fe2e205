#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mackey {

using Integer = mpz_class;

/// A weakly decreasing sequence of positive integers.  Trailing zeros are
/// stripped on construction, so the empty partition has a single
/// representation.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Text form "3,1"; "-" (or the empty string) denotes the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// Part i, or 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Degree first, then reverse lexicographic inside a degree, so that (2)
/// precedes (1,1).  This is the printing order used everywhere.
struct GradedOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

Partition conjugate(const Partition& lambda);

/// True iff mu_i <= lambda_i for all i.
bool contains(const Partition& lambda, const Partition& mu);

/// All partitions of n in GradedOrder.
std::vector<Partition> partitions_of(int n);

/// All partitions of size <= n in GradedOrder.
std::vector<Partition> partitions_up_to(int n);

/// All mu contained in lambda, in GradedOrder.
std::vector<Partition> subpartitions(const Partition& lambda);

Integer factorial(int n);
Integer binomial(int n, int k);

/// Hook lengths, row by row.
std::vector<int> hook_lengths(const Partition& lambda);

/// Number of standard Young tableaux (hook length formula).
Integer syt_count(const Partition& lambda);

/// dim S_lambda(C^n) by the hook content formula; 0 when lambda has more
/// than n parts.
Integer dim_schur(const Partition& lambda, int n);

}  // namespace mackey
