#pragma once

// Exact sparse linear algebra over Q.  Vectors are sorted (index, value)
// lists with no stored zeros; subspaces are kept in reduced row echelon form,
// which makes membership tests, coordinates and quotient maps cheap.

#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mackey {

using Rational = mpq_class;

/// Thrown when a cooperative cancellation request is observed.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("computation cancelled") {}
};

/// Shared flag polled by long-running rank computations.  Copies observe the
/// same flag.
class CancellationToken {
 public:
  CancellationToken() : flag_(std::make_shared<std::atomic<bool>>(false)) {}
  void cancel() const { flag_->store(true, std::memory_order_relaxed); }
  bool cancelled() const { return flag_->load(std::memory_order_relaxed); }
  void check() const {
    if (cancelled()) throw Cancelled();
  }
  std::atomic<bool>* raw() const { return flag_.get(); }

 private:
  std::shared_ptr<std::atomic<bool>> flag_;
};

class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  explicit SparseVector(std::vector<Entry> entries);  // sorts, merges, drops zeros
  static SparseVector unit(std::size_t index, const Rational& value = 1);
  static SparseVector from_dense(std::span<const Rational> values);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }
  const Entry& front() const { return entries_.front(); }
  Rational at(std::size_t index) const;

  /// this += factor * other
  void axpy(const Rational& factor, const SparseVector& other);
  void scale(const Rational& factor);
  std::vector<Rational> to_dense(std::size_t dimension) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

SparseVector operator+(SparseVector a, const SparseVector& b);
SparseVector operator-(SparseVector a, const SparseVector& b);

/// Column-stored sparse matrix: column j is the image of basis vector j.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  void set_column(std::size_t j, SparseVector column);
  void add(std::size_t i, std::size_t j, const Rational& value);
  Rational at(std::size_t i, std::size_t j) const { return columns_[j].at(i); }

  SparseVector apply(const SparseVector& v) const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix operator+(const SparseMatrix& other) const;
  SparseMatrix operator-(const SparseMatrix& other) const;
  SparseMatrix scaled(const Rational& factor) const;
  Rational trace() const;
  bool is_zero() const;
  bool is_diagonal() const;
  std::vector<std::vector<Rational>> to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Incrementally built row echelon basis.  Every stored row has leading
/// entry 1 and no other stored row shares its leading column.
class EchelonBasis {
 public:
  explicit EchelonBasis(const CancellationToken* token = nullptr) : token_(token) {}

  /// Eliminate every entry of v that sits in a leading column.
  SparseVector reduce(SparseVector v) const;
  /// Returns true if v was independent of the stored rows.
  bool insert(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }
  /// Fully reduced rows, ordered by leading column.
  std::vector<SparseVector> reduced_rows() const;

 private:
  std::map<std::size_t, SparseVector> rows_;
  const CancellationToken* token_;
};

/// Subspace of Q^ambient stored by its unique reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, std::span<const SparseVector> vectors,
                       const CancellationToken* token = nullptr);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its component along the pivot coordinates; zero iff v lies in
  /// the subspace.  Linear in v, so it doubles as a quotient map.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to basis(); v must lie in the subspace.
  SparseVector coordinates(const SparseVector& v) const;
  /// Inverse of coordinates().
  SparseVector lift(const SparseVector& coords) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b, const CancellationToken* token = nullptr);
Subspace intersect(const Subspace& a, const Subspace& b, const CancellationToken* token = nullptr);

/// Kernel of the linear map sending e_j to images[j], as coefficient
/// vectors in Q^{images.size()}.
std::vector<SparseVector> kernel_of_images(std::span<const SparseVector> images,
                                           std::size_t target_dimension,
                                           const CancellationToken* token = nullptr);

/// { v in domain : op(v) lies in target for every op }.
Subspace preimage(const Subspace& domain, std::span<const SparseMatrix* const> ops,
                  const Subspace& target, const CancellationToken* token = nullptr);

std::size_t rank(const SparseMatrix& m, const CancellationToken* token = nullptr);

/// Dense determinant by fraction-exact Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> rows);

}  // namespace mackey
