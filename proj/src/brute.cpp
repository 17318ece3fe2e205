#include "mackey/brute.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>

#include "mackey/socle.hpp"

namespace mackey::brute {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t checked_power(int base, int exponent, std::size_t budget) {
  std::size_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= static_cast<std::size_t>(base);
    if (out > budget)
      throw BudgetExceeded("tensor space " + std::to_string(base) + "^" + std::to_string(exponent) +
                           " exceeds the size budget of " + std::to_string(budget));
  }
  return out;
}

/// Word arithmetic for a tensor space; position 0 is most significant.
class WordSpace {
 public:
  explicit WordSpace(TensorShape shape) : shape_(shape) {
    const int total = shape.dual + shape.vector;
    place_.assign(static_cast<std::size_t>(total), 1);
    for (int pos = total - 2; pos >= 0; --pos)
      place_[pos] = place_[pos + 1] * static_cast<std::size_t>(shape.rank);
    size_ = total == 0 ? 1 : place_[0] * static_cast<std::size_t>(shape.rank);
  }

  std::size_t size() const { return size_; }
  int positions() const { return shape_.dual + shape_.vector; }
  bool is_dual(int pos) const { return pos < shape_.dual; }

  std::vector<int> digits(std::size_t index) const {
    std::vector<int> out(static_cast<std::size_t>(positions()));
    for (int pos = positions() - 1; pos >= 0; --pos) {
      out[pos] = static_cast<int>(index % static_cast<std::size_t>(shape_.rank));
      index /= static_cast<std::size_t>(shape_.rank);
    }
    return out;
  }

  std::size_t index(std::span<const int> digits) const {
    std::size_t out = 0;
    for (int d : digits) out = out * static_cast<std::size_t>(shape_.rank) + static_cast<std::size_t>(d);
    return out;
  }

  /// E(row, col) applied to one basis word.
  SparseVector apply(MatrixUnit unit, std::size_t word) const {
    auto d = digits(word);
    std::vector<SparseVector::Entry> out;
    for (int pos = 0; pos < positions(); ++pos) {
      const long long shift = static_cast<long long>(place_[pos]);
      if (is_dual(pos)) {
        if (d[pos] == unit.row)
          out.emplace_back(static_cast<std::size_t>(static_cast<long long>(word) +
                                                    (unit.col - unit.row) * shift),
                           Rational(-1));
      } else if (d[pos] == unit.col) {
        out.emplace_back(static_cast<std::size_t>(static_cast<long long>(word) +
                                                  (unit.row - unit.col) * shift),
                         Rational(1));
      }
    }
    return SparseVector(std::move(out));
  }

  /// gl(N) weight: +1 per vector digit, -1 per dual digit.
  std::vector<int> weight(std::size_t word) const {
    std::vector<int> w(static_cast<std::size_t>(shape_.rank), 0);
    auto d = digits(word);
    for (int pos = 0; pos < positions(); ++pos) w[d[pos]] += is_dual(pos) ? -1 : 1;
    return w;
  }

  std::string label(std::size_t word) const {
    auto d = digits(word);
    std::string out;
    for (int pos = 0; pos < positions(); ++pos) {
      if (pos) out += '|';
      out += 'e' + std::to_string(d[pos] + 1);
      if (is_dual(pos)) out += '*';
    }
    return out.empty() ? "1" : out;
  }

  std::map<std::vector<int>, std::vector<std::size_t>> weight_blocks() const {
    std::map<std::vector<int>, std::vector<std::size_t>> blocks;
    for (std::size_t w = 0; w < size_; ++w) blocks[weight(w)].push_back(w);
    return blocks;
  }

 private:
  TensorShape shape_;
  std::vector<std::size_t> place_;
  std::size_t size_ = 1;
};

/// [E(a,b), E(c,d)] = delta_bc E(a,d) - delta_da E(c,b)
std::vector<std::pair<MatrixUnit, int>> bracket(MatrixUnit x, MatrixUnit y) {
  std::vector<std::pair<MatrixUnit, int>> out;
  if (x.col == y.row) out.push_back({{x.row, y.col}, 1});
  if (y.col == x.row) out.push_back({{y.row, x.col}, -1});
  return out;
}

void check_brackets(const ExplicitModule& module, int N) {
  const int probe = std::min(N, 3);
  std::vector<MatrixUnit> units;
  for (int i = 0; i < probe; ++i)
    for (int j = 0; j < probe; ++j) units.push_back({i, j});
  for (const auto& x : units)
    for (const auto& y : units) {
      SparseMatrix expected(module.dimension(), module.dimension());
      for (const auto& [unit, sign] : bracket(x, y))
        expected = expected + module.action(unit).scaled(sign);
      if (commutator(module.action(x), module.action(y)) != expected)
        throw std::logic_error("tensor action violates the bracket relation for " + label_of(x) +
                               ", " + label_of(y));
    }
}

std::vector<const SparseMatrix*> actions_of(const ExplicitModule& module,
                                            std::span<const MatrixUnit> units) {
  std::vector<const SparseMatrix*> ops;
  for (const auto& unit : units) ops.push_back(&module.action(unit));
  return ops;
}

/// Permutations of tensor positions forming a Young subgroup, with signs.
struct Permutation {
  std::vector<int> target;
  int sign = 1;
};

std::vector<Permutation> young_subgroup(int positions, const std::vector<std::vector<int>>& blocks) {
  std::vector<Permutation> out;
  std::vector<int> identity(static_cast<std::size_t>(positions));
  std::iota(identity.begin(), identity.end(), 0);
  out.push_back({identity, 1});
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<Permutation> next;
    std::vector<int> order(block.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
          if (order[i] > order[j]) ++inversions;
      for (const auto& base : out) {
        Permutation p = base;
        for (std::size_t i = 0; i < block.size(); ++i) p.target[block[i]] = block[order[i]];
        p.sign = base.sign * (inversions % 2 ? -1 : 1);
        next.push_back(std::move(p));
      }
    } while (std::next_permutation(order.begin(), order.end()));
    out = std::move(next);
  }
  return out;
}

/// Row and column position sets of the row-reading tableau of lambda whose
/// cells are tensor positions offset, offset+1, ...
void tableau_blocks(const Partition& lambda, int offset, std::vector<std::vector<int>>& rows,
                    std::vector<std::vector<int>>& columns) {
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(lambda[0]));
  int position = offset;
  for (int r = 0; r < lambda.length(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < lambda[r]; ++c) {
      row.push_back(position);
      cols[c].push_back(position);
      ++position;
    }
    rows.push_back(std::move(row));
  }
  for (auto& c : cols) columns.push_back(std::move(c));
}

SparseVector permute_sum(const WordSpace& space, const std::vector<Permutation>& group,
                         const SparseVector& v, bool use_sign) {
  std::map<std::size_t, Rational> accumulated;
  for (const auto& [word, coeff] : v.entries()) {
    auto digits = space.digits(word);
    std::vector<int> moved(digits.size());
    for (const auto& perm : group) {
      for (std::size_t pos = 0; pos < digits.size(); ++pos) moved[perm.target[pos]] = digits[pos];
      Rational term = coeff;
      if (use_sign && perm.sign < 0) term = -term;
      accumulated[space.index(moved)] += term;
    }
  }
  std::vector<SparseVector::Entry> entries(accumulated.begin(), accumulated.end());
  return SparseVector(std::move(entries));
}

bool essential_impl(const ExplicitModule& module, const Filtration& filtration,
                    const std::function<Subspace(const ExplicitModule&)>& socle_of,
                    const Options& options) {
  const std::size_t dim = module.dimension();
  if (filtration.empty()) throw std::invalid_argument("filtration is empty");
  for (std::size_t i = 0; i < filtration.size(); ++i) {
    if (filtration[i].ambient() != dim)
      throw std::invalid_argument("filtration step lives in the wrong space");
    if (!is_invariant(module, filtration[i]))
      throw NotInvariant("filtration step " + std::to_string(i) + " is not invariant");
    if (i > 0 && !filtration[i].contains(filtration[i - 1]))
      throw std::invalid_argument("filtration is not ascending at step " + std::to_string(i));
  }
  if (filtration.back().dim() != dim)
    throw std::invalid_argument("filtration does not end at the whole module");

  Filtration chain;
  chain.push_back(Subspace(dim));
  chain.insert(chain.end(), filtration.begin(), filtration.end());
  for (std::size_t p = 0; p + 2 < chain.size(); ++p) {
    const Subspace& top = chain[p + 2];
    ExplicitModule upper = restrict_to(module, top, options.token);
    auto in_top = [&](const Subspace& s) {
      std::vector<SparseVector> coords;
      for (const auto& v : s.basis()) coords.push_back(top.coordinates(v));
      return Subspace::span(top.dim(), coords, options.token);
    };
    Subspace bottom = in_top(chain[p]);
    Subspace middle = in_top(chain[p + 1]);
    QuotientMap to_quotient(bottom);
    ExplicitModule two_step = quotient(upper, bottom, options.token);
    Subspace socle = socle_of(two_step);
    if (!to_quotient.image(middle, options.token).contains(socle)) return false;
  }
  return true;
}

}  // namespace

std::size_t budget_from_env() {
  if (const char* text = std::getenv("SOCLE_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(text, &end, 10);
    if (end != text && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultBudget;
}

std::string label_of(MatrixUnit unit) {
  return "E(" + std::to_string(unit.row + 1) + "," + std::to_string(unit.col + 1) + ")";
}

std::size_t TensorShape::dimension() const {
  return checked_power(rank, dual + vector, static_cast<std::size_t>(-1));
}

ExplicitModule::ExplicitModule(std::size_t dimension, std::vector<Generator> generators,
                               std::vector<std::string> basis_labels)
    : dimension_(dimension),
      generators_(std::move(generators)),
      basis_labels_(std::move(basis_labels)) {
  if (basis_labels_.size() != dimension_)
    throw std::invalid_argument("basis label count does not match the dimension");
  for (const auto& g : generators_)
    if (g.action.rows() != dimension_ || g.action.cols() != dimension_)
      throw std::invalid_argument("action matrix of " + g.label + " has the wrong size");
}

const Generator* ExplicitModule::find(std::string_view label) const {
  for (const auto& g : generators_)
    if (g.label == label) return &g;
  return nullptr;
}

const Generator* ExplicitModule::find(MatrixUnit unit) const {
  for (const auto& g : generators_)
    if (g.unit && *g.unit == unit) return &g;
  return nullptr;
}

const SparseMatrix& ExplicitModule::action(std::string_view label) const {
  if (const Generator* g = find(label)) return g->action;
  throw std::invalid_argument("module has no generator " + std::string(label));
}

const SparseMatrix& ExplicitModule::action(MatrixUnit unit) const {
  if (const Generator* g = find(unit)) return g->action;
  throw std::invalid_argument("module has no generator " + label_of(unit));
}

SparseVector ExplicitModule::to_tensor_space(const SparseVector& v) const {
  if (!shape_) throw std::logic_error("module does not live in a tensor space");
  if (embedding_.empty()) return v;
  SparseVector out;
  for (const auto& [index, value] : v.entries()) out.axpy(value, embedding_.at(index));
  return out;
}

void ExplicitModule::set_provenance(TensorShape shape, std::vector<SparseVector> embedding) {
  shape_ = shape;
  embedding_ = std::move(embedding);
}

ExplicitModule build_tensor_module(int N, int m, int n, const Options& options) {
  if (N <= 0) throw std::invalid_argument("rank must be positive");
  if (m < 0 || n < 0) throw std::invalid_argument("tensor degrees must be nonnegative");
  const std::size_t dim = checked_power(N, m + n, options.budget);
  TensorShape shape{N, m, n};
  WordSpace space(shape);
  std::vector<Generator> generators;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (options.token) options.token->check();
      MatrixUnit unit{a, b};
      SparseMatrix action(dim, dim);
      for (std::size_t w = 0; w < dim; ++w) action.set_column(w, space.apply(unit, w));
      generators.push_back({label_of(unit), unit, std::move(action)});
    }
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t w = 0; w < dim; ++w) labels.push_back(space.label(w));
  ExplicitModule module(dim, std::move(generators), std::move(labels));
  module.set_provenance(shape, {});
  check_brackets(module, N);
  return module;
}

std::vector<int> tensor_word(const TensorShape& shape, std::size_t index) {
  return WordSpace(shape).digits(index);
}

std::size_t tensor_index(const TensorShape& shape, std::span<const int> digits) {
  return WordSpace(shape).index(digits);
}

bool is_invariant(const ExplicitModule& module, const Subspace& subspace) {
  for (const auto& g : module.generators())
    for (const auto& v : subspace.basis())
      if (!subspace.contains(g.action.apply(v))) return false;
  return true;
}

ExplicitModule with_generators(const ExplicitModule& module, std::span<const std::string> labels) {
  std::vector<Generator> kept;
  for (const auto& label : labels) {
    const Generator* g = module.find(label);
    if (!g) throw std::invalid_argument("module has no generator " + label);
    kept.push_back(*g);
  }
  ExplicitModule out(module.dimension(), std::move(kept), module.basis_labels());
  if (module.tensor_shape()) out.set_provenance(*module.tensor_shape(), module.embedding());
  return out;
}

ExplicitModule restrict_to(const ExplicitModule& module, const Subspace& subspace,
                           const CancellationToken* token) {
  if (subspace.ambient() != module.dimension())
    throw std::invalid_argument("subspace lives in the wrong space");
  const std::size_t dim = subspace.dim();
  std::vector<Generator> generators;
  for (const auto& g : module.generators()) {
    if (token) token->check();
    SparseMatrix action(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      SparseVector image = g.action.apply(subspace.basis()[j]);
      if (!subspace.contains(image))
        throw NotInvariant("subspace is not invariant under " + g.label);
      action.set_column(j, subspace.coordinates(image));
    }
    generators.push_back({g.label, g.unit, std::move(action)});
  }
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < dim; ++j) {
    const auto& v = subspace.basis()[j];
    labels.push_back(v.nonzeros() == 1 ? module.basis_labels()[v.front().first]
                                       : "v" + std::to_string(j));
  }
  ExplicitModule out(dim, std::move(generators), std::move(labels));
  if (module.tensor_shape()) {
    std::vector<SparseVector> embedding;
    for (const auto& v : subspace.basis()) embedding.push_back(module.to_tensor_space(v));
    out.set_provenance(*module.tensor_shape(), std::move(embedding));
  }
  return out;
}

QuotientMap::QuotientMap(Subspace kernel)
    : kernel_(std::move(kernel)), position_(kernel_.ambient(), kNone) {
  std::size_t next_pivot = 0;
  for (std::size_t i = 0; i < kernel_.ambient(); ++i) {
    if (next_pivot < kernel_.pivots().size() && kernel_.pivots()[next_pivot] == i) {
      ++next_pivot;
      continue;
    }
    position_[i] = free_.size();
    free_.push_back(i);
  }
}

SparseVector QuotientMap::apply(const SparseVector& v) const {
  std::vector<SparseVector::Entry> out;
  const SparseVector remainder = kernel_.reduce(v);
  for (const auto& [index, value] : remainder.entries())
    out.emplace_back(position_.at(index), value);
  return SparseVector(std::move(out));
}

Subspace QuotientMap::image(const Subspace& s, const CancellationToken* token) const {
  std::vector<SparseVector> images;
  for (const auto& v : s.basis()) images.push_back(apply(v));
  return Subspace::span(dimension(), images, token);
}

SparseVector QuotientMap::section(const SparseVector& q) const {
  std::vector<SparseVector::Entry> out;
  for (const auto& [index, value] : q.entries()) out.emplace_back(free_.at(index), value);
  return SparseVector(std::move(out));
}

ExplicitModule quotient(const ExplicitModule& module, const Subspace& submodule,
                        const CancellationToken* token) {
  if (!is_invariant(module, submodule)) throw NotInvariant("quotient by a non-invariant subspace");
  QuotientMap map(submodule);
  const std::size_t dim = map.dimension();
  std::vector<Generator> generators;
  for (const auto& g : module.generators()) {
    if (token) token->check();
    SparseMatrix action(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      action.set_column(j, map.apply(g.action.apply(map.section(SparseVector::unit(j)))));
    generators.push_back({g.label, g.unit, std::move(action)});
  }
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < dim; ++j)
    labels.push_back(module.basis_labels()[map.section(SparseVector::unit(j)).front().first]);
  return ExplicitModule(dim, std::move(generators), std::move(labels));
}

Subspace generated_submodule(const ExplicitModule& module, std::span<const SparseVector> vectors,
                             const CancellationToken* token) {
  EchelonBasis echelon(token);
  std::deque<SparseVector> pending;
  for (const auto& v : vectors)
    if (echelon.insert(v)) pending.push_back(v);
  while (!pending.empty()) {
    SparseVector v = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : module.generators()) {
      SparseVector image = g.action.apply(v);
      if (echelon.insert(image)) pending.push_back(std::move(image));
    }
  }
  return Subspace::span(module.dimension(), echelon.reduced_rows(), token);
}

Subspace traceless_subspace(const ExplicitModule& module, const Options& options) {
  if (!module.is_tensor_space())
    throw std::invalid_argument("traceless_subspace needs a module built by build_tensor_module");
  const TensorShape shape = *module.tensor_shape();
  if (shape.dual == 0 || shape.vector == 0) return Subspace::whole(module.dimension());
  WordSpace space(shape);
  WordSpace target(TensorShape{shape.rank, shape.dual - 1, shape.vector - 1});
  const std::size_t pairs = static_cast<std::size_t>(shape.dual * shape.vector);
  std::vector<SparseVector> kernel_vectors;
  for (const auto& [weight, words] : space.weight_blocks()) {
    std::vector<SparseVector> images;
    for (std::size_t word : words) {
      auto digits = space.digits(word);
      std::vector<SparseVector::Entry> stacked;
      for (int i = 0; i < shape.dual; ++i)
        for (int j = 0; j < shape.vector; ++j) {
          const int vpos = shape.dual + j;
          if (digits[i] != digits[vpos]) continue;
          std::vector<int> rest;
          for (int pos = 0; pos < space.positions(); ++pos)
            if (pos != i && pos != vpos) rest.push_back(digits[pos]);
          const std::size_t pair = static_cast<std::size_t>(i * shape.vector + j);
          stacked.emplace_back(pair * target.size() + target.index(rest), Rational(1));
        }
      images.emplace_back(std::move(stacked));
    }
    for (const auto& coeffs : kernel_of_images(images, pairs * target.size(), options.token)) {
      std::vector<SparseVector::Entry> entries;
      for (const auto& [index, value] : coeffs.entries()) entries.emplace_back(words[index], value);
      kernel_vectors.emplace_back(std::move(entries));
    }
  }
  return Subspace::span(module.dimension(), kernel_vectors, options.token);
}

Subspace young_project(const ExplicitModule& module, const Partition& lambda, const Partition& mu,
                       const Options& options) {
  if (!module.is_tensor_space())
    throw std::invalid_argument("young_project needs a module built by build_tensor_module");
  const TensorShape shape = *module.tensor_shape();
  if (lambda.size() != shape.dual || mu.size() != shape.vector)
    throw std::invalid_argument("partitions " + lambda.to_string() + " / " + mu.to_string() +
                                " do not match tensor degrees " + std::to_string(shape.dual) +
                                " / " + std::to_string(shape.vector));
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> columns;
  tableau_blocks(lambda, 0, rows, columns);
  tableau_blocks(mu, shape.dual, rows, columns);
  WordSpace space(shape);
  const auto row_group = young_subgroup(space.positions(), rows);
  const auto column_group = young_subgroup(space.positions(), columns);
  Subspace traceless = traceless_subspace(module, options);
  std::vector<SparseVector> images;
  for (const auto& v : traceless.basis()) {
    if (options.token) options.token->check();
    images.push_back(permute_sum(space, column_group, permute_sum(space, row_group, v, false), true));
  }
  return Subspace::span(module.dimension(), images, options.token);
}

ParabolicData parabolic(int N, int b) {
  if (b <= 0 || b >= N)
    throw std::invalid_argument("parabolic block size " + std::to_string(b) +
                                " must satisfy 0 < b < " + std::to_string(N));
  ParabolicData data{N, b, {}, {}};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const bool i_low = i < b;
      const bool j_low = j < b;
      if (i_low == j_low) data.levi.push_back({i, j});
      else if (!i_low && j_low) data.nilradical.push_back({i, j});
    }
  auto in_nilradical = [&](MatrixUnit u) {
    return std::find(data.nilradical.begin(), data.nilradical.end(), u) != data.nilradical.end();
  };
  for (const auto& y : data.nilradical) {
    if (y.row == y.col) throw std::logic_error("nilradical generator is not nilpotent");
    for (const auto& x : parabolic_units(data))
      for (const auto& [unit, sign] : bracket(x, y))
        if (!in_nilradical(unit)) throw std::logic_error("nilradical is not an ideal");
  }
  return data;
}

std::vector<MatrixUnit> parabolic_units(const ParabolicData& data) {
  std::vector<MatrixUnit> out = data.levi;
  out.insert(out.end(), data.nilradical.begin(), data.nilradical.end());
  return out;
}

std::vector<MatrixUnit> levi_raising(const ParabolicData& data) {
  std::vector<MatrixUnit> out;
  for (int i = 0; i + 1 < data.rank; ++i)
    if ((i + 1 < data.block) || (i >= data.block)) out.push_back({i, i + 1});
  return out;
}

std::vector<std::size_t> layer_dimensions(const Filtration& filtration) {
  std::vector<std::size_t> out;
  std::size_t below = 0;
  for (const auto& step : filtration) {
    out.push_back(step.dim() - below);
    below = step.dim();
  }
  return out;
}

Subspace socle_by_nilradical(const ExplicitModule& module, const ParabolicData& data,
                             const CancellationToken* token) {
  auto ops = actions_of(module, data.nilradical);
  return preimage(Subspace::whole(module.dimension()), ops, Subspace(module.dimension()), token);
}

Subspace socle_by_radical(const ExplicitModule& module, std::span<const std::string> algebra,
                          const CancellationToken* token) {
  const std::size_t d = module.dimension();
  std::vector<const SparseMatrix*> gens;
  for (const auto& label : algebra) gens.push_back(&module.action(label));
  auto flatten = [d](const SparseMatrix& m) {
    std::vector<SparseVector::Entry> entries;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [i, value] : m.column(j).entries()) entries.emplace_back(j * d + i, value);
    return SparseVector(std::move(entries));
  };
  // Enveloping associative algebra: span of all words in the generators.
  EchelonBasis span(token);
  std::vector<SparseMatrix> elements;
  std::deque<std::size_t> pending;
  SparseMatrix unit = SparseMatrix::identity(d);
  span.insert(flatten(unit));
  elements.push_back(std::move(unit));
  pending.push_back(0);
  while (!pending.empty()) {
    const std::size_t index = pending.front();
    pending.pop_front();
    for (const SparseMatrix* g : gens) {
      SparseMatrix product = *g * elements[index];
      if (span.insert(flatten(product))) {
        elements.push_back(std::move(product));
        pending.push_back(elements.size() - 1);
      }
    }
  }
  // Radical = trace-form radical (characteristic zero).
  const std::size_t count = elements.size();
  std::vector<SparseVector> gram_columns;
  for (std::size_t b = 0; b < count; ++b) {
    if (token) token->check();
    std::vector<SparseVector::Entry> column;
    for (std::size_t a = 0; a < count; ++a)
      column.emplace_back(a, (elements[a] * elements[b]).trace());
    gram_columns.emplace_back(std::move(column));
  }
  std::vector<SparseMatrix> radical;
  for (const auto& coeffs : kernel_of_images(gram_columns, count, token)) {
    SparseMatrix r(d, d);
    for (const auto& [a, value] : coeffs.entries()) r = r + elements[a].scaled(value);
    radical.push_back(std::move(r));
  }
  std::vector<const SparseMatrix*> ops;
  for (const auto& r : radical) ops.push_back(&r);
  return preimage(Subspace::whole(d), ops, Subspace(d), token);
}

Filtration socle_filtration_parabolic(const ExplicitModule& module, const ParabolicData& data,
                                      const Options& options) {
  auto ops = actions_of(module, data.nilradical);
  for (const auto& unit : data.levi) (void)module.action(unit);
  const Subspace whole = Subspace::whole(module.dimension());
  Filtration out;
  Subspace current(module.dimension());
  while (current.dim() < module.dimension()) {
    Subspace next = preimage(whole, ops, current, options.token);
    if (next.dim() == current.dim())
      throw std::logic_error("nilradical does not act nilpotently on the module");
    out.push_back(next);
    current = std::move(next);
  }
  if (out.empty()) out.push_back(whole);
  return out;
}

bool is_essential_filtration(const ExplicitModule& module, const Filtration& filtration,
                             const ParabolicData& data, const Options& options) {
  std::vector<std::string> labels;
  for (const auto& unit : parabolic_units(data)) labels.push_back(label_of(unit));
  ExplicitModule acting = with_generators(module, labels);
  return essential_impl(
      acting, filtration,
      [&](const ExplicitModule& q) { return socle_by_nilradical(q, data, options.token); },
      options);
}

bool is_essential_filtration(const ExplicitModule& module, const Filtration& filtration,
                             std::span<const std::string> algebra, const Options& options) {
  ExplicitModule acting = with_generators(module, algebra);
  return essential_impl(
      acting, filtration,
      [&](const ExplicitModule& q) { return socle_by_radical(q, algebra, options.token); },
      options);
}

Filtration binary_word_filtration(const ExplicitModule& module, int block, const Options& options) {
  if (!module.tensor_shape())
    throw std::invalid_argument("binary_word_filtration needs a module inside a tensor space");
  const TensorShape shape = *module.tensor_shape();
  if (block <= 0 || block >= shape.rank)
    throw std::invalid_argument("distinguished block size must satisfy 0 < b < N");
  WordSpace space(shape);
  // outside[w]: which dual tensorands of word w leave the distinguished block.
  std::vector<BinaryWord> outside(space.size());
  for (std::size_t w = 0; w < space.size(); ++w) {
    auto digits = space.digits(w);
    BinaryWord r(static_cast<std::size_t>(shape.dual));
    for (int i = 0; i < shape.dual; ++i) r[i] = digits[i] >= block ? 1 : 0;
    outside[w] = std::move(r);
  }
  Filtration out;
  for (int k = 0; k <= shape.dual; ++k) {
    // A word lies in V^r (x) V^{(x)n} for some admissible r iff its own
    // pattern is admissible (admissibility is closed under lowering bits).
    auto words = filtration_words(shape.dual, k);
    std::vector<bool> allowed(space.size());
    for (std::size_t w = 0; w < space.size(); ++w)
      allowed[w] = std::binary_search(words.begin(), words.end(), outside[w]);
    if (module.is_tensor_space()) {
      std::vector<SparseVector> units;
      for (std::size_t w = 0; w < space.size(); ++w)
        if (allowed[w]) units.push_back(SparseVector::unit(w));
      out.push_back(Subspace::span(module.dimension(), units, options.token));
      continue;
    }
    // Submodule: coefficient vectors whose image has no forbidden words.
    std::vector<SparseVector> images;
    for (const auto& v : module.embedding()) {
      std::vector<SparseVector::Entry> forbidden;
      for (const auto& [w, value] : v.entries())
        if (!allowed[w]) forbidden.emplace_back(w, value);
      images.emplace_back(std::move(forbidden));
    }
    auto kernel = kernel_of_images(images, space.size(), options.token);
    out.push_back(Subspace::span(module.dimension(), kernel, options.token));
  }
  return out;
}

std::map<Weight, Subspace> weight_decompose(const ExplicitModule& module,
                                            std::span<const std::string> cartan) {
  std::vector<const SparseMatrix*> ops;
  for (const auto& label : cartan) ops.push_back(&module.action(label));
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!commutator(*ops[i], *ops[j]).is_zero())
        throw std::invalid_argument("generators " + cartan[i] + " and " + cartan[j] +
                                    " do not commute");
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (!ops[i]->is_diagonal())
      throw std::invalid_argument("generator " + cartan[i] + " is not diagonal in this basis");
  std::map<Weight, std::vector<SparseVector>> grouped;
  for (std::size_t j = 0; j < module.dimension(); ++j) {
    Weight w;
    for (const auto* op : ops) w.push_back(op->at(j, j));
    grouped[w].push_back(SparseVector::unit(j));
  }
  std::map<Weight, Subspace> out;
  for (const auto& [w, vectors] : grouped)
    out.emplace(w, Subspace::span(module.dimension(), vectors));
  return out;
}

std::vector<std::string> cartan_labels(int N) {
  std::vector<std::string> out;
  for (int i = 0; i < N; ++i) out.push_back(label_of({i, i}));
  return out;
}

std::size_t vandermonde_span(std::span<const SparseVector> components, const SparseMatrix& h,
                             const CancellationToken* token) {
  if (components.empty()) throw std::invalid_argument("no components given");
  std::vector<Rational> eigenvalues;
  SparseVector x;
  for (const auto& c : components) {
    if (c.empty()) throw std::invalid_argument("component is zero");
    SparseVector image = h.apply(c);
    Rational t = image.at(c.front().first) / c.front().second;
    SparseVector scaled = c;
    scaled.scale(t);
    if (image != scaled) throw std::invalid_argument("component is not an eigenvector of h");
    if (std::find(eigenvalues.begin(), eigenvalues.end(), t) != eigenvalues.end())
      throw std::invalid_argument("repeated eigenvalue among the components");
    eigenvalues.push_back(t);
    x.axpy(1, c);
  }
  EchelonBasis echelon(token);
  SparseVector power = x;
  for (std::size_t i = 0; i < components.size(); ++i) {
    echelon.insert(power);
    power = h.apply(power);
  }
  return echelon.rank();
}

std::size_t highest_weight_count(const ExplicitModule& module, const Subspace& within,
                                 std::span<const MatrixUnit> raising,
                                 const CancellationToken* token) {
  auto ops = actions_of(module, raising);
  return preimage(within, ops, Subspace(module.dimension()), token).dim();
}

std::vector<std::size_t> layer_constituent_counts(const ExplicitModule& module,
                                                  const Filtration& filtration,
                                                  const ParabolicData& data,
                                                  const CancellationToken* token) {
  const auto raising = levi_raising(data);
  std::vector<std::size_t> out;
  std::size_t below = 0;
  for (const auto& step : filtration) {
    std::size_t count = highest_weight_count(module, step, raising, token);
    out.push_back(count - below);
    below = count;
  }
  return out;
}

std::size_t traceless_dimension(int N, int m, int n, const Options& options) {
  checked_power(N, m + n, options.budget);
  TensorShape shape{N, m, n};
  WordSpace space(shape);
  if (m == 0 || n == 0) return space.size();
  WordSpace target(TensorShape{N, m - 1, n - 1});
  std::size_t total = 0;
  for (const auto& [weight, words] : space.weight_blocks()) {
    EchelonBasis echelon(options.token);
    for (std::size_t word : words) {
      auto digits = space.digits(word);
      std::vector<SparseVector::Entry> stacked;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
          if (digits[i] != digits[m + j]) continue;
          std::vector<int> rest;
          for (int pos = 0; pos < m + n; ++pos)
            if (pos != i && pos != m + j) rest.push_back(digits[pos]);
          stacked.emplace_back(static_cast<std::size_t>(i * n + j) * target.size() + target.index(rest),
                               Rational(1));
        }
      echelon.insert(SparseVector(std::move(stacked)));
    }
    total += words.size() - echelon.rank();
  }
  return total;
}

std::map<std::pair<Partition, Partition>, std::size_t> mixed_multiplicities(
    int p, int q, int N, const Options& options) {
  checked_power(N, p + q, options.budget);
  TensorShape shape{N, p, q};
  WordSpace space(shape);
  auto blocks = space.weight_blocks();
  std::map<std::pair<Partition, Partition>, std::size_t> out;
  for (int r = 0; r <= std::min(p, q); ++r)
    for (const auto& beta : partitions_of(p - r))
      for (const auto& gamma : partitions_of(q - r)) {
        if (beta.length() + gamma.length() > N) continue;
        std::vector<int> weight(static_cast<std::size_t>(N), 0);
        for (int i = 0; i < gamma.length(); ++i) weight[i] = gamma[i];
        for (int i = 0; i < beta.length(); ++i) weight[N - 1 - i] -= beta[i];
        auto it = blocks.find(weight);
        if (it == blocks.end()) {
          out[{beta, gamma}] = 0;
          continue;
        }
        EchelonBasis echelon(options.token);
        for (std::size_t word : it->second) {
          std::vector<SparseVector::Entry> stacked;
          for (int i = 0; i + 1 < N; ++i) {
            const SparseVector image = space.apply({i, i + 1}, word);
            for (const auto& [w, value] : image.entries())
              stacked.emplace_back(static_cast<std::size_t>(i) * space.size() + w, value);
          }
          echelon.insert(SparseVector(std::move(stacked)));
        }
        out[{beta, gamma}] = it->second.size() - echelon.rank();
      }
  return out;
}

}  // namespace mackey::brute
