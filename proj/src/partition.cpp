#include "mackey/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace mackey {

namespace {

void normalize(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (parts[i] == 0) throw std::invalid_argument("partition has an interior zero part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

void subpartitions_rec(const Partition& lambda, std::size_t row, int bound,
                       std::vector<int>& current, std::vector<Partition>& out) {
  if (row == static_cast<std::size_t>(lambda.length())) {
    out.emplace_back(current);
    return;
  }
  int top = std::min(bound, lambda[row]);
  for (int part = 0; part <= top; ++part) {
    current.push_back(part);
    subpartitions_rec(lambda, row + 1, part, current, out);
    current.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  normalize(parts_);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  if (text == "-") return Partition();
  if (text.empty()) throw std::invalid_argument("empty partition text (use \"-\" for the empty partition)");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value <= 0)
      throw std::invalid_argument("malformed partition \"" + std::string(text) + "\"");
    parts.push_back(value);
    pos = comma + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw std::invalid_argument("partition \"" + std::string(text) +
                                  "\" is not weakly decreasing");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int column = 0; column < lambda[0]; ++column) {
    int height = 0;
    while (height < lambda.length() && lambda[height] > column) ++height;
    parts.push_back(height);
  }
  return Partition(std::move(parts));
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> current;
  subpartitions_rec(lambda, 0, lambda[0], current, out);
  std::sort(out.begin(), out.end(), GradedOrder{});
  return out;
}

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  Partition transpose = conjugate(lambda);
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks.push_back((lambda[i] - j - 1) + (transpose[j] - i - 1) + 1);
  return hooks;
}

Integer syt_count(const Partition& lambda) {
  Integer hooks = 1;
  for (int h : hook_lengths(lambda)) hooks *= h;
  Integer out = factorial(lambda.size());
  // Exact by the hook length formula.
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hooks.get_mpz_t());
  return out;
}

Integer dim_schur(const Partition& lambda, int n) {
  if (lambda.length() > n) return 0;
  Integer numerator = 1;
  Integer denominator = 1;
  auto hooks = hook_lengths(lambda);
  std::size_t cell = 0;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      numerator *= n + j - i;
      denominator *= hooks[cell++];
    }
  mpz_divexact(numerator.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return numerator;
}

}  // namespace mackey
