#include "mackey/symfunc.hpp"

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>

#include "mackey/linalg.hpp"

namespace mackey {

SchurExpr SchurExpr::single(const Partition& lambda, const Integer& coeff) {
  SchurExpr out;
  out.add(lambda, coeff);
  return out;
}

void SchurExpr::add(const Partition& lambda, const Integer& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Integer SchurExpr::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

SchurExpr SchurExpr::component(int k) const {
  SchurExpr out;
  for (const auto& [lambda, coeff] : terms_)
    if (lambda.size() == k) out.terms_.emplace(lambda, coeff);
  return out;
}

SchurExpr& SchurExpr::operator+=(const SchurExpr& other) {
  for (const auto& [lambda, coeff] : other.terms_) add(lambda, coeff);
  return *this;
}

void TensorSchurExpr::add(const Partition& left, const Partition& right, const Integer& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.emplace(Key{left, right}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Integer TensorSchurExpr::coefficient(const Partition& left, const Partition& right) const {
  auto it = terms_.find(Key{left, right});
  return it == terms_.end() ? Integer(0) : it->second;
}

TensorSchurExpr& TensorSchurExpr::operator+=(const TensorSchurExpr& other) {
  for (const auto& [key, coeff] : other.terms_) add(key.first, key.second, coeff);
  return *this;
}

namespace {

/// Counts LR tableaux of shape outer/inner with the given content.  Cells are
/// visited in reading order (rows top to bottom, each right to left), so the
/// lattice condition can be checked on every prefix.
class LrEnumerator {
 public:
  LrEnumerator(const Partition& outer, const Partition& inner, const Partition& content)
      : outer_(outer), inner_(inner), content_(content), used_(content.length(), 0) {
    for (int r = 0; r < outer.length(); ++r) {
      filling_.emplace_back(outer[r], -1);
      for (int c = outer[r] - 1; c >= inner[r]; --c) cells_.emplace_back(r, c);
    }
  }

  Integer count() {
    total_ = 0;
    fill(0);
    return total_;
  }

 private:
  void fill(std::size_t index) {
    if (index == cells_.size()) {
      ++total_;
      return;
    }
    auto [r, c] = cells_[index];
    int low = 0;
    int high = content_.length() - 1;
    if (r > 0 && c >= inner_[r - 1]) low = filling_[r - 1][c] + 1;
    if (c + 1 < outer_[r]) high = std::min(high, filling_[r][c + 1]);
    for (int v = low; v <= high; ++v) {
      if (used_[v] >= content_[v]) continue;
      if (v > 0 && used_[v] >= used_[v - 1]) continue;
      ++used_[v];
      filling_[r][c] = v;
      fill(index + 1);
      filling_[r][c] = -1;
      --used_[v];
    }
  }

  const Partition& outer_;
  const Partition& inner_;
  const Partition& content_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> filling_;
  std::vector<int> used_;
  unsigned long total_ = 0;
};

struct TripleKey {
  Partition lambda, mu, nu;
  friend bool operator==(const TripleKey&, const TripleKey&) = default;
};

struct TripleHash {
  std::size_t operator()(const TripleKey& k) const noexcept {
    PartitionHash h;
    std::size_t seed = h(k.lambda);
    seed ^= h(k.mu) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    seed ^= h(k.nu) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

class LrCache {
 public:
  std::optional<Integer> find(const TripleKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(TripleKey key, Integer value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), std::move(value));
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<TripleKey, Integer, TripleHash> table_;
};

LrCache& lr_cache() {
  static LrCache cache;
  return cache;
}

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
  if (mu.empty()) return nu == lambda ? 1 : 0;
  if (nu.empty()) return mu == lambda ? 1 : 0;
  TripleKey key{lambda, mu, nu};
  if (auto hit = lr_cache().find(key)) return *hit;
  LrEnumerator enumerator(lambda, mu, nu);
  Integer value = enumerator.count();
  lr_cache().store(std::move(key), value);
  return value;
}

std::size_t lr_cache_size() { return lr_cache().size(); }

SchurExpr schur_product(const Partition& mu, const Partition& nu) {
  SchurExpr out;
  for (const auto& lambda : partitions_of(mu.size() + nu.size())) {
    if (!contains(lambda, mu) || !contains(lambda, nu)) continue;
    out.add(lambda, lr_coefficient(lambda, mu, nu));
  }
  return out;
}

TensorSchurExpr coproduct(const Partition& lambda) {
  TensorSchurExpr out;
  for (const auto& mu : subpartitions(lambda)) {
    for (const auto& nu : partitions_of(lambda.size() - mu.size())) {
      if (!contains(lambda, nu)) continue;
      out.add(mu, nu, lr_coefficient(lambda, mu, nu));
    }
  }
  return out;
}

TensorSchurExpr homogeneous_component(const TensorSchurExpr& f, int k, Side side) {
  TensorSchurExpr out;
  for (const auto& [key, coeff] : f.terms()) {
    const Partition& chosen = side == Side::left ? key.first : key.second;
    if (chosen.size() == k) out.add(key.first, key.second, coeff);
  }
  return out;
}

std::vector<Rational> complete_homogeneous(std::span<const Rational> point, int max_degree) {
  std::vector<Rational> h(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, Rational(0));
  h[0] = 1;
  for (const auto& x : point)
    for (std::size_t k = 1; k < h.size(); ++k) h[k] += x * h[k - 1];
  return h;
}

Rational eval_schur(const Partition& lambda, std::span<const Rational> point) {
  const int length = lambda.length();
  if (length == 0) return 1;
  if (length > static_cast<int>(point.size())) return 0;
  auto h = complete_homogeneous(point, lambda[0] + length - 1);
  std::vector<std::vector<Rational>> jacobi_trudi(length, std::vector<Rational>(length));
  for (int i = 0; i < length; ++i)
    for (int j = 0; j < length; ++j) {
      int degree = lambda[i] - i + j;
      if (degree >= 0) jacobi_trudi[i][j] = h[static_cast<std::size_t>(degree)];
    }
  return determinant(std::move(jacobi_trudi));
}

}  // namespace mackey
