#pragma once

#include "kimura/errors.hpp"
#include "kimura/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kimura::symgroup {

inline constexpr int kDefaultPartitionBound = 12;
inline constexpr int kDefaultAlgebraBound = 7;

/// Weakly decreasing list of positive parts.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be nonincreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int size() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }
  const std::vector<int>& parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 0; j < (parts_.empty() ? 0 : parts_[0]); ++j) {
      int len = 0;
      for (int p : parts_)
        if (p > j) ++len;
      c.push_back(len);
    }
    return Partition(std::move(c));
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// A cycle type is a partition of n.
using CycleType = Partition;

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions(int n, int bound = kDefaultPartitionBound) {
  if (n < 0) throw std::invalid_argument("partitions: negative n");
  if (n > bound) throw size_error("partitions: n = " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// n! as an integer (n ≤ 20).
inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Number of permutations of the given cycle type: n! / Π_i i^{m_i} m_i!.
inline std::int64_t class_size(const Partition& ct) {
  std::map<int, int> mult;
  for (int part : ct.parts()) ++mult[part];
  std::int64_t z = 1;
  for (const auto& [len, m] : mult)
    for (int j = 1; j <= m; ++j) z *= len * j;
  return factorial(ct.size()) / z;
}

/// dim V_λ by the hook-length formula.
inline std::int64_t hook_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Rational::Big num = 1;
  for (int i = 2; i <= lambda.size(); ++i) num *= i;
  Rational::Big den = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const int arm = lambda[i] - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      den *= arm + leg + 1;
    }
  return Rational(Rational::Big(num / den)).to_int64();
}

namespace detail {

// Murnaghan–Nakayama on beta-sets: a partition with parts λ_1 ≥ … ≥ λ_l is
// encoded by the strictly decreasing set {λ_i + l − i}. Removing a border
// strip of length r is moving one bead from b to b − r onto an empty
// position; the height of the strip is the number of beads strictly between.
inline std::int64_t mn_character(std::vector<int> beads, const std::vector<int>& cycles, std::size_t next,
                                 std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
  if (next == cycles.size()) return 1;
  auto key = std::make_pair(beads, next);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = cycles[next];
  std::int64_t total = 0;
  for (std::size_t idx = 0; idx < beads.size(); ++idx) {
    const int b = beads[idx];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int between = 0;
    for (int other : beads)
      if (other > target && other < b) ++between;
    std::vector<int> moved = beads;
    moved[idx] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    const std::int64_t sub = mn_character(std::move(moved), cycles, next + 1, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// χ_λ on any permutation of cycle type ct.
inline std::int64_t character(const Partition& lambda, const CycleType& ct, int bound = kDefaultPartitionBound) {
  if (lambda.size() != ct.size())
    throw std::invalid_argument("character: λ " + lambda.str() + " and cycle type " + ct.str() +
                                " are partitions of different integers");
  if (lambda.size() > bound) throw size_error("character: degree exceeds bound " + std::to_string(bound));
  const int l = static_cast<int>(lambda.length());
  std::vector<int> beads;
  for (int i = 0; i < l; ++i) beads.push_back(lambda[static_cast<std::size_t>(i)] + l - 1 - i);
  std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
  return detail::mn_character(beads, ct.parts(), 0, memo);
}

/// Conjugacy classes of Σ_n in table order: the cycle types in increasing
/// lexicographic order, so the identity class (1,…,1) comes first.
inline std::vector<CycleType> class_order(int n, int bound = kDefaultPartitionBound) {
  auto cts = partitions(n, bound);
  std::reverse(cts.begin(), cts.end());
  return cts;
}

/// Character table: rows follow partitions(n), columns follow class_order(n).
inline std::vector<std::vector<std::int64_t>> character_table(int n, int bound = kDefaultPartitionBound) {
  const auto parts = partitions(n, bound);
  const auto classes = class_order(n, bound);
  std::vector<std::vector<std::int64_t>> table;
  for (const auto& lambda : parts) {
    std::vector<std::int64_t> row;
    for (const auto& ct : classes) row.push_back(character(lambda, ct, bound));
    table.push_back(std::move(row));
  }
  return table;
}

/// Bijection of {0, …, n−1} (printed 1-based).
///
/// Products compose left to right: (σ·τ)(i) = τ(σ(i)). This is the
/// convention under which σ ↦ Γ_σ, the factor permutation
/// (x_1, …, x_n) ↦ (x_σ(1), …, x_σ(n)), is a homomorphism.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }
  /// From 1-based images, e.g. {2, 1, 3} for (12).
  static Permutation from_one_based(std::vector<int> images) {
    for (auto& v : images) --v;
    return Permutation(std::move(images));
  }

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& images() const noexcept { return images_; }

  friend Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.degree() != t.degree()) throw std::invalid_argument("Permutation product: degree mismatch");
    std::vector<int> v(s.images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = t(s(static_cast<int>(i)));
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(v));
  }

  CycleType cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
  }

  int cycles() const { return static_cast<int>(cycle_type().length()); }

  int sign() const {
    int s = 1;
    const CycleType type = cycle_type();
    for (int len : type.parts())
      if (len % 2 == 0) s = -s;
    return s;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i] + 1;
    os << "]";
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

private:
  std::vector<int> images_;
};

/// All n! permutations in lexicographic order of image lists.
inline std::vector<Permutation> permutations(int n, int bound = kDefaultPartitionBound) {
  if (n < 0) throw std::invalid_argument("permutations: negative n");
  if (n > bound) throw size_error("permutations: degree exceeds bound " + std::to_string(bound));
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Element of Q[Σ_n], stored as a sorted sparse map with no zero coefficients.
class GroupAlgebraElement {
public:
  using Terms = std::map<Permutation, Rational>;

  explicit GroupAlgebraElement(int n) : n_(n) {}
  GroupAlgebraElement(int n, const Permutation& s, const Rational& c) : n_(n) { add(s, c); }

  static GroupAlgebraElement identity(int n) { return GroupAlgebraElement(n, Permutation::identity(n), Rational(1)); }

  int degree() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Permutation& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational() : it->second;
  }

  void add(const Permutation& s, const Rational& c) {
    if (s.degree() != n_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a.check(b);
    for (const auto& [s, c] : b.terms_) a.add(s, c);
    return a;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a.check(b);
    for (const auto& [s, c] : b.terms_) a.add(s, -c);
    return a;
  }
  friend GroupAlgebraElement operator*(const Rational& r, const GroupAlgebraElement& a) {
    GroupAlgebraElement out(a.n_);
    for (const auto& [s, c] : a.terms_) out.add(s, r * c);
    return out;
  }

  /// Convolution product: O(|a|·|b|) double loop.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    a.check(b);
    GroupAlgebraElement out(a.n_);
    for (const auto& [s, cs] : a.terms_)
      for (const auto& [t, ct] : b.terms_) out.add(s * t, cs * ct);
    return out;
  }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
      os << (first ? "" : " + ") << c << "*" << s.str();
      first = false;
    }
    return os.str();
  }

private:
  void check(const GroupAlgebraElement& b) const {
    if (b.n_ != n_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
  }

  int n_;
  Terms terms_;
};

/// Coefficient of every Γ_σ of cycle type ct in d_λ: dim(V_λ)·χ_λ(ct)/n!.
inline Rational idempotent_coefficient(const Partition& lambda, const CycleType& ct) {
  return Rational(hook_dimension(lambda) * character(lambda, ct), factorial(lambda.size()));
}

/// The central idempotent d_λ = (dim V_λ / n!) Σ_σ χ_λ(σ) σ.
inline GroupAlgebraElement young_idempotent(const Partition& lambda, int bound = kDefaultAlgebraBound) {
  const int n = lambda.size();
  if (n > bound) throw size_error("young_idempotent: degree " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  std::map<CycleType, Rational> coeff;
  for (const auto& ct : partitions(n)) coeff.emplace(ct, idempotent_coefficient(lambda, ct));
  GroupAlgebraElement d(n);
  for (const auto& s : permutations(n)) d.add(s, coeff.at(s.cycle_type()));
  return d;
}

}  // namespace kimura::symgroup
