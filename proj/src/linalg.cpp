#include "mackey/linalg.hpp"

#include <algorithm>

namespace mackey {

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [index, value] : entries) {
    if (!entries_.empty() && entries_.back().first == index) {
      entries_.back().second += value;
    } else {
      entries_.emplace_back(index, std::move(value));
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return sgn(e.second) == 0; });
}

SparseVector SparseVector::unit(std::size_t index, const Rational& value) {
  SparseVector v;
  if (sgn(value) != 0) v.entries_.emplace_back(index, value);
  return v;
}

SparseVector SparseVector::from_dense(std::span<const Rational> values) {
  SparseVector v;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (sgn(values[i]) != 0) v.entries_.emplace_back(i, values[i]);
  return v;
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void SparseVector::axpy(const Rational& factor, const SparseVector& other) {
  if (sgn(factor) == 0 || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational value = a->second + factor * b->second;
      if (sgn(value) != 0) merged.emplace_back(a->first, std::move(value));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
  if (sgn(factor) == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

std::vector<Rational> SparseVector::to_dense(std::size_t dimension) const {
  std::vector<Rational> out(dimension);
  for (const auto& [index, value] : entries_) out.at(index) = value;
  return out;
}

SparseVector operator+(SparseVector a, const SparseVector& b) {
  a.axpy(1, b);
  return a;
}

SparseVector operator-(SparseVector a, const SparseVector& b) {
  a.axpy(-1, b);
  return a;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(i);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(rows[i][j]) != 0) m.add(i, j, rows[i][j]);
  }
  return m;
}

void SparseMatrix::set_column(std::size_t j, SparseVector column) {
  columns_.at(j) = std::move(column);
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& value) {
  columns_.at(j).axpy(1, SparseVector::unit(i, value));
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, value] : v.entries()) out.axpy(value, columns_.at(j));
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols() != other.rows()) throw std::invalid_argument("matrix size mismatch in product");
  SparseMatrix out(rows_, other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) out.columns_[j] = apply(other.columns_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols() != other.cols())
    throw std::invalid_argument("matrix size mismatch in sum");
  SparseMatrix out = *this;
  for (std::size_t j = 0; j < cols(); ++j) out.columns_[j].axpy(1, other.columns_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols() != other.cols())
    throw std::invalid_argument("matrix size mismatch in difference");
  SparseMatrix out = *this;
  for (std::size_t j = 0; j < cols(); ++j) out.columns_[j].axpy(-1, other.columns_[j]);
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& factor) const {
  SparseMatrix out = *this;
  for (auto& column : out.columns_) column.scale(factor);
  return out;
}

Rational SparseMatrix::trace() const {
  Rational out = 0;
  for (std::size_t j = 0; j < cols(); ++j) out += columns_[j].at(j);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const SparseVector& c) { return c.empty(); });
}

bool SparseMatrix::is_diagonal() const {
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j].entries())
      if (e.first != j) return false;
  return true;
}

std::vector<std::vector<Rational>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols()));
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [i, value] : columns_[j].entries()) out[i][j] = value;
  return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.nonzeros()) {
    auto it = rows_.find(v.entries()[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    // Stored rows only have entries at or after their leading column, so
    // everything before pos is untouched.
    Rational factor = -v.entries()[pos].second;
    v.axpy(factor, it->second);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  if (token_) token_->check();
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational lead = v.front().second;
  v.scale(1 / lead);
  std::size_t column = v.front().first;
  rows_.emplace(column, std::move(v));
  return true;
}

std::vector<SparseVector> EchelonBasis::reduced_rows() const {
  std::map<std::size_t, SparseVector> reduced;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    if (token_) token_->check();
    SparseVector row = it->second;
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [column, value] : row.entries())
      if (column != it->first && reduced.count(column)) hits.emplace_back(column, value);
    for (const auto& [column, value] : hits) row.axpy(-value, reduced.at(column));
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<SparseVector> out;
  out.reserve(reduced.size());
  for (auto& [column, row] : reduced) out.push_back(std::move(row));
  return out;
}

Subspace Subspace::span(std::size_t ambient, std::span<const SparseVector> vectors,
                        const CancellationToken* token) {
  EchelonBasis echelon(token);
  for (const auto& v : vectors) {
    if (!v.empty() && v.entries().back().first >= ambient)
      throw std::out_of_range("vector index exceeds ambient dimension");
    echelon.insert(v);
  }
  Subspace out(ambient);
  out.basis_ = echelon.reduced_rows();
  for (const auto& row : out.basis_) out.pivots_.push_back(row.front().first);
  return out;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace out(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    out.basis_.push_back(SparseVector::unit(i));
    out.pivots_.push_back(i);
  }
  return out;
}

SparseVector Subspace::reduce(const SparseVector& v) const {
  SparseVector out = v;
  for (const auto& [column, value] : v.entries()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), column);
    if (it != pivots_.end() && *it == column)
      out.axpy(-value, basis_[static_cast<std::size_t>(it - pivots_.begin())]);
  }
  return out;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const SparseVector& v) { return contains(v); });
}

SparseVector Subspace::coordinates(const SparseVector& v) const {
  std::vector<SparseVector::Entry> coords;
  for (const auto& [column, value] : v.entries()) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), column);
    if (it != pivots_.end() && *it == column)
      coords.emplace_back(static_cast<std::size_t>(it - pivots_.begin()), value);
  }
  return SparseVector(std::move(coords));
}

SparseVector Subspace::lift(const SparseVector& coords) const {
  SparseVector out;
  for (const auto& [index, value] : coords.entries()) out.axpy(value, basis_.at(index));
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b, const CancellationToken* token) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch in sum");
  std::vector<SparseVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), all, token);
}

Subspace intersect(const Subspace& a, const Subspace& b, const CancellationToken* token) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch in intersect");
  std::vector<SparseVector> images = a.basis();
  for (const auto& v : b.basis()) {
    SparseVector negated = v;
    negated.scale(-1);
    images.push_back(std::move(negated));
  }
  auto kernel = kernel_of_images(images, a.ambient(), token);
  std::vector<SparseVector> vectors;
  for (const auto& coeffs : kernel) {
    SparseVector v;
    for (const auto& [index, value] : coeffs.entries())
      if (index < a.dim()) v.axpy(value, a.basis()[index]);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(a.ambient(), vectors, token);
}

std::vector<SparseVector> kernel_of_images(std::span<const SparseVector> images,
                                           std::size_t target_dimension,
                                           const CancellationToken* token) {
  EchelonBasis echelon(token);
  for (std::size_t j = 0; j < images.size(); ++j) {
    SparseVector augmented = images[j];
    if (!augmented.empty() && augmented.entries().back().first >= target_dimension)
      throw std::out_of_range("image index exceeds target dimension");
    augmented.axpy(1, SparseVector::unit(target_dimension + j));
    echelon.insert(std::move(augmented));
  }
  std::vector<SparseVector> kernel;
  for (auto it = echelon.rows().lower_bound(target_dimension); it != echelon.rows().end(); ++it) {
    std::vector<SparseVector::Entry> coeffs;
    for (const auto& [column, value] : it->second.entries())
      coeffs.emplace_back(column - target_dimension, value);
    kernel.emplace_back(std::move(coeffs));
  }
  return kernel;
}

Subspace preimage(const Subspace& domain, std::span<const SparseMatrix* const> ops,
                  const Subspace& target, const CancellationToken* token) {
  const std::size_t stride = target.ambient();
  std::vector<SparseVector> images;
  images.reserve(domain.dim());
  for (const auto& v : domain.basis()) {
    std::vector<SparseVector::Entry> stacked;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      if (ops[k]->cols() != domain.ambient() || ops[k]->rows() != stride)
        throw std::invalid_argument("operator size mismatch in preimage");
      SparseVector image = target.reduce(ops[k]->apply(v));
      for (const auto& [index, value] : image.entries())
        stacked.emplace_back(k * stride + index, value);
    }
    images.emplace_back(std::move(stacked));
  }
  auto kernel = kernel_of_images(images, std::max<std::size_t>(1, ops.size()) * stride, token);
  std::vector<SparseVector> vectors;
  vectors.reserve(kernel.size());
  for (const auto& coeffs : kernel) vectors.push_back(domain.lift(coeffs));
  return Subspace::span(domain.ambient(), vectors, token);
}

std::size_t rank(const SparseMatrix& m, const CancellationToken* token) {
  EchelonBasis echelon(token);
  for (std::size_t j = 0; j < m.cols(); ++j) echelon.insert(m.column(j));
  return echelon.rank();
}

Rational determinant(std::vector<std::vector<Rational>> rows) {
  const std::size_t n = rows.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (rows[col].size() != n) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t pivot = col;
    while (pivot < n && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      Rational factor = rows[r][col] / rows[col][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[col][c];
    }
  }
  return det;
}

}  // namespace mackey
