#pragma once

// Finite-rank oracle.  Everything here is explicit exact linear algebra on
// tensor spaces (C^N*)^{(x)m} (x) (C^N)^{(x)n} with the matrix-unit action of
// gl(N).  Dual vectors are rows and x acts on them by f -> -f x, so E(i,j)
// sends e_i* to -e_j*.
//
// The parabolic subalgebra stabilizing span(e_1*, ..., e_b*) plays the role of
// the Mackey Lie algebra: the distinguished block stands in for V_* and the
// complement for V*/V_*.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mackey/linalg.hpp"
#include "mackey/partition.hpp"

namespace mackey::brute {

inline constexpr std::size_t kDefaultBudget = 20000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a subspace that must be invariant is not.
class NotInvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::size_t budget = kDefaultBudget;
  const CancellationToken* token = nullptr;
};

/// Reads SOCLE_BUDGET, falling back to kDefaultBudget.
std::size_t budget_from_env();

/// Zero-based matrix unit E(row, col).  Labels are printed one-based.
struct MatrixUnit {
  int row = 0;
  int col = 0;
  friend bool operator==(const MatrixUnit&, const MatrixUnit&) = default;
};

std::string label_of(MatrixUnit unit);

struct TensorShape {
  int rank = 0;    // N
  int dual = 0;    // m copies of C^N*
  int vector = 0;  // n copies of C^N
  std::size_t dimension() const;
};

struct Generator {
  std::string label;
  std::optional<MatrixUnit> unit;
  SparseMatrix action;
};

/// Finite-dimensional module given by exact action matrices.  Modules built
/// from a tensor space remember how their basis sits inside it.
class ExplicitModule {
 public:
  ExplicitModule(std::size_t dimension, std::vector<Generator> generators,
                 std::vector<std::string> basis_labels);

  std::size_t dimension() const { return dimension_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<std::string>& basis_labels() const { return basis_labels_; }

  const Generator* find(std::string_view label) const;
  const Generator* find(MatrixUnit unit) const;
  const SparseMatrix& action(std::string_view label) const;
  const SparseMatrix& action(MatrixUnit unit) const;

  /// Shape of the tensor space this module lives in, if any.
  const std::optional<TensorShape>& tensor_shape() const { return shape_; }
  /// True for the tensor space itself (basis = tensor words).
  bool is_tensor_space() const {
    return shape_.has_value() && embedding_.empty() && dimension_ == shape_->dimension();
  }
  /// Basis vectors in tensor-space coordinates (empty for the tensor space).
  const std::vector<SparseVector>& embedding() const { return embedding_; }
  /// A vector of this module in tensor-space coordinates.
  SparseVector to_tensor_space(const SparseVector& v) const;

  /// Records where the basis sits in a tensor space; an empty embedding
  /// marks the tensor space itself.
  void set_provenance(TensorShape shape, std::vector<SparseVector> embedding);

 private:
  std::size_t dimension_;
  std::vector<Generator> generators_;
  std::vector<std::string> basis_labels_;
  std::optional<TensorShape> shape_;
  std::vector<SparseVector> embedding_;
};

/// (C^N*)^{(x)m} (x) (C^N)^{(x)n} with all N^2 matrix units.  Basis words are
/// ordered with the first tensor position most significant.
ExplicitModule build_tensor_module(int N, int m, int n, const Options& options = {});

/// Tensor word digits (zero-based indices) of basis element `index`.
std::vector<int> tensor_word(const TensorShape& shape, std::size_t index);
std::size_t tensor_index(const TensorShape& shape, std::span<const int> digits);

bool is_invariant(const ExplicitModule& module, const Subspace& subspace);

/// Same space and provenance, acted on only by the named generators.
ExplicitModule with_generators(const ExplicitModule& module, std::span<const std::string> labels);

/// The submodule on an invariant subspace, in its echelon basis.
ExplicitModule restrict_to(const ExplicitModule& module, const Subspace& subspace,
                           const CancellationToken* token = nullptr);

/// Coordinates on M/S: a vector maps to its remainder modulo S, read off on
/// the non-pivot coordinates of S.
class QuotientMap {
 public:
  explicit QuotientMap(Subspace kernel);
  std::size_t dimension() const { return free_.size(); }
  SparseVector apply(const SparseVector& v) const;
  Subspace image(const Subspace& s, const CancellationToken* token = nullptr) const;
  /// A representative in the ambient space.
  SparseVector section(const SparseVector& q) const;

 private:
  Subspace kernel_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> position_;
};

ExplicitModule quotient(const ExplicitModule& module, const Subspace& submodule,
                        const CancellationToken* token = nullptr);

/// Smallest invariant subspace containing the given vectors.
Subspace generated_submodule(const ExplicitModule& module, std::span<const SparseVector> vectors,
                             const CancellationToken* token = nullptr);

/// Joint kernel of all m*n contraction maps.  The echelon basis consists of
/// weight vectors.
Subspace traceless_subspace(const ExplicitModule& module, const Options& options = {});

/// Image of c_lambda (x) c_mu on the traceless subspace, with c the Young
/// symmetrizer of the row-reading tableau (row symmetrizer first, then
/// column antisymmetrizer).  lambda acts on the dual positions.
Subspace young_project(const ExplicitModule& module, const Partition& lambda,
                       const Partition& mu, const Options& options = {});

/// Parabolic subalgebra of gl(N) stabilizing span(e_1*, ..., e_b*).
struct ParabolicData {
  int rank = 0;
  int block = 0;
  std::vector<MatrixUnit> levi;
  std::vector<MatrixUnit> nilradical;
};

ParabolicData parabolic(int N, int b);

/// All generators of the parabolic (Levi first).
std::vector<MatrixUnit> parabolic_units(const ParabolicData& data);

/// E(i,i+1) with both indices inside one Levi block.
std::vector<MatrixUnit> levi_raising(const ParabolicData& data);

/// Ascending chain of subspaces; the last one is the whole module.
using Filtration = std::vector<Subspace>;

std::vector<std::size_t> layer_dimensions(const Filtration& filtration);

/// Joint kernel of the nilradical.  For modules on which the Levi factor acts
/// semisimply this is the socle over the parabolic.
Subspace socle_by_nilradical(const ExplicitModule& module, const ParabolicData& data,
                             const CancellationToken* token = nullptr);

/// Socle over the associative algebra generated by the named generators:
/// the common kernel of its Jacobson radical, found as the trace-form
/// radical of the enveloping matrix algebra.
Subspace socle_by_radical(const ExplicitModule& module, std::span<const std::string> algebra,
                          const CancellationToken* token = nullptr);

/// Iterated nilradical invariants: F_1 = socle, F_{i+1}/F_i = socle of M/F_i.
Filtration socle_filtration_parabolic(const ExplicitModule& module, const ParabolicData& data,
                                      const Options& options = {});

/// Decides essentiality with an implicit zero module in front: each step
/// F_{p+1}/F_p must contain the socle of F_{p+2}/F_p.
bool is_essential_filtration(const ExplicitModule& module, const Filtration& filtration,
                             const ParabolicData& data, const Options& options = {});
bool is_essential_filtration(const ExplicitModule& module, const Filtration& filtration,
                             std::span<const std::string> algebra, const Options& options = {});

/// W^k = sum over binary words r with |r| <= k of V^r (x) V^{(x)n}, where a
/// 0 in r confines that dual tensorand to the distinguished block of size b.
/// For a submodule of a tensor space the filtration is intersected with it.
Filtration binary_word_filtration(const ExplicitModule& module, int block,
                                  const Options& options = {});

using Weight = std::vector<Rational>;

/// Simultaneous eigenspaces of diagonal commuting generators.
std::map<Weight, Subspace> weight_decompose(const ExplicitModule& module,
                                            std::span<const std::string> cartan);

std::vector<std::string> cartan_labels(int N);

/// Rank of {x, hx, ..., h^d x} for x the sum of d+1 eigenvectors of h with
/// distinct eigenvalues.
std::size_t vandermonde_span(std::span<const SparseVector> components, const SparseMatrix& h,
                             const CancellationToken* token = nullptr);

/// Dimension of the joint kernel of the given operators inside `within`.
std::size_t highest_weight_count(const ExplicitModule& module, const Subspace& within,
                                 std::span<const MatrixUnit> raising,
                                 const CancellationToken* token = nullptr);

/// Number of Levi-simple constituents in each layer of a parabolic-stable
/// filtration (highest weight vectors of the Levi, layer by layer).
std::vector<std::size_t> layer_constituent_counts(const ExplicitModule& module,
                                                  const Filtration& filtration,
                                                  const ParabolicData& data,
                                                  const CancellationToken* token = nullptr);

/// dim of the traceless subspace of (C^N*)^{(x)m} (x) (C^N)^{(x)n}, computed
/// one weight space at a time without building the action matrices.
std::size_t traceless_dimension(int N, int m, int n, const Options& options = {});

/// Multiplicity of every V_{beta,gamma} in (C^N*)^{(x)p} (x) (C^N)^{(x)q},
/// counted as gl(N) highest weight vectors of weight
/// (gamma, 0, ..., 0, -reverse(beta)).
std::map<std::pair<Partition, Partition>, std::size_t> mixed_multiplicities(
    int p, int q, int N, const Options& options = {});

}  // namespace mackey::brute
