#pragma once

#include <map>
#include <span>
#include <utility>

#include <gmpxx.h>

#include "mackey/partition.hpp"

namespace mackey {

using Rational = mpq_class;

/// Finitely supported Z-combination of Schur functions.  Zero coefficients
/// are never stored.
class SchurExpr {
 public:
  using Terms = std::map<Partition, Integer, GradedOrder>;

  SchurExpr() = default;
  static SchurExpr single(const Partition& lambda, const Integer& coeff = 1);

  void add(const Partition& lambda, const Integer& coeff);
  Integer coefficient(const Partition& lambda) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Degree-k homogeneous component.
  SchurExpr component(int k) const;

  SchurExpr& operator+=(const SchurExpr& other);
  friend bool operator==(const SchurExpr&, const SchurExpr&) = default;

 private:
  Terms terms_;
};

struct PairOrder {
  bool operator()(const std::pair<Partition, Partition>& a,
                  const std::pair<Partition, Partition>& b) const {
    GradedOrder less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

/// Z-combination of ordered pairs mu (x) nu, an element of Sym (x) Sym.
class TensorSchurExpr {
 public:
  using Key = std::pair<Partition, Partition>;
  using Terms = std::map<Key, Integer, PairOrder>;

  void add(const Partition& left, const Partition& right, const Integer& coeff);
  Integer coefficient(const Partition& left, const Partition& right) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorSchurExpr& operator+=(const TensorSchurExpr& other);
  friend bool operator==(const TensorSchurExpr&, const TensorSchurExpr&) = default;

 private:
  Terms terms_;
};

enum class Side { left, right };

/// c^lambda_{mu,nu}: the number of LR tableaux of shape lambda/mu and content
/// nu.  Results are memoized in a process-wide cache that is safe for
/// concurrent use.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Number of entries currently held by the LR cache (diagnostics only).
std::size_t lr_cache_size();

/// s_mu * s_nu in the Schur basis.
SchurExpr schur_product(const Partition& mu, const Partition& nu);

/// Delta(s_lambda) = sum c^lambda_{mu,nu} mu (x) nu.
TensorSchurExpr coproduct(const Partition& lambda);

/// Terms of f whose partition on the chosen side has size exactly k.
TensorSchurExpr homogeneous_component(const TensorSchurExpr& f, int k, Side side);

/// Complete homogeneous symmetric polynomials h_0..h_max_degree at a point.
std::vector<Rational> complete_homogeneous(std::span<const Rational> point, int max_degree);

/// s_lambda(x_1..x_n) by the Jacobi-Trudi determinant.  Returns 0 when
/// lambda has more than n parts.
Rational eval_schur(const Partition& lambda, std::span<const Rational> point);

}  // namespace mackey
