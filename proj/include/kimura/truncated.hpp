#pragma once

#include "kimura/rational.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kimura {

inline constexpr int kMaxOrder = 6;

/// Element of Q[ε]/(ε^k), 1 ≤ k ≤ kMaxOrder.
///
/// The ε-ideal is the model of the homologically trivial correspondences:
/// it is nilpotent of index exactly k, and realization (k → 1) kills it.
class TruncatedScalar {
public:
  TruncatedScalar() = default;  // zero of order 1
  explicit TruncatedScalar(int order) : order_(check_order(order)) {}
  TruncatedScalar(const Rational& constant, int order) : order_(check_order(order)) { c_[0] = constant; }

  /// ε^m truncated at the given order (zero when m ≥ order).
  static TruncatedScalar epsilon_power(int m, int order) {
    TruncatedScalar s(order);
    if (m < 0) throw std::invalid_argument("epsilon_power: negative exponent");
    if (m < order) s.c_[m] = 1;
    return s;
  }

  int order() const noexcept { return order_; }

  const Rational& operator[](int m) const { return c_.at(static_cast<std::size_t>(m)); }
  Rational& coefficient(int m) {
    if (m < 0 || m >= order_) throw std::out_of_range("TruncatedScalar: coefficient index");
    return c_[m];
  }

  bool is_zero() const {
    for (int i = 0; i < order_; ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  /// No ε-part.
  bool is_constant() const {
    for (int i = 1; i < order_; ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  bool is_unit() const { return !c_[0].is_zero(); }
  /// Lies in the ε-ideal.
  bool is_nilpotent() const { return c_[0].is_zero(); }

  /// Same value read at a different truncation order (drops or zero-extends).
  TruncatedScalar with_order(int order) const {
    TruncatedScalar s(order);
    for (int i = 0; i < order && i < order_; ++i) s.c_[i] = c_[i];
    return s;
  }

  TruncatedScalar inverse() const {
    if (!is_unit()) throw std::domain_error("TruncatedScalar::inverse: not a unit: " + str());
    // a = a0 (1 + x), x nilpotent: a^{-1} = a0^{-1} (1 - x + x^2 - ...)
    const Rational inv0 = c_[0].reciprocal();
    TruncatedScalar x = *this * TruncatedScalar(inv0, order_);
    x.c_[0] = 0;
    TruncatedScalar term(Rational(1), order_);
    TruncatedScalar sum(Rational(1), order_);
    for (int i = 1; i < order_; ++i) {
      term = term * (-x);
      sum += term;
    }
    return sum * TruncatedScalar(inv0, order_);
  }

  TruncatedScalar operator-() const {
    TruncatedScalar s(order_);
    for (int i = 0; i < order_; ++i)
      if (!c_[i].is_zero()) s.c_[i] = -c_[i];
    return s;
  }

  TruncatedScalar& operator+=(const TruncatedScalar& b) {
    same_order(b);
    for (int i = 0; i < order_; ++i)
      if (!b.c_[i].is_zero()) c_[i] += b.c_[i];
    return *this;
  }
  TruncatedScalar& operator-=(const TruncatedScalar& b) {
    same_order(b);
    for (int i = 0; i < order_; ++i)
      if (!b.c_[i].is_zero()) c_[i] -= b.c_[i];
    return *this;
  }

  /// this += a * b, without materializing the product.
  void add_product(const TruncatedScalar& a, const TruncatedScalar& b) {
    same_order(a);
    same_order(b);
    for (int i = 0; i < order_; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j < order_; ++j) {
        if (b.c_[j].is_zero()) continue;
        c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
  }

  /// this += r * b for a rational r.
  void add_scaled(const Rational& r, const TruncatedScalar& b) {
    same_order(b);
    if (r.is_zero()) return;
    for (int i = 0; i < order_; ++i)
      if (!b.c_[i].is_zero()) c_[i] += r * b.c_[i];
  }

  friend TruncatedScalar operator+(TruncatedScalar a, const TruncatedScalar& b) { return a += b; }
  friend TruncatedScalar operator-(TruncatedScalar a, const TruncatedScalar& b) { return a -= b; }
  friend TruncatedScalar operator*(const TruncatedScalar& a, const TruncatedScalar& b) {
    TruncatedScalar s(a.order_);
    s.add_product(a, b);
    return s;
  }
  friend TruncatedScalar operator*(const Rational& r, const TruncatedScalar& b) {
    TruncatedScalar s(b.order_);
    s.add_scaled(r, b);
    return s;
  }

  friend bool operator==(const TruncatedScalar& a, const TruncatedScalar& b) {
    if (a.order_ != b.order_) return false;
    for (int i = 0; i < a.order_; ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  /// Human-readable form, e.g. "1 + 2*eps - 1/2*eps^2".
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < order_; ++i) {
      if (c_[i].is_zero()) continue;
      Rational v = c_[i];
      if (!first) {
        os << (v.sign() < 0 ? " - " : " + ");
        if (v.sign() < 0) v = -v;
      }
      if (i == 0) {
        os << v;
      } else {
        if (!v.is_one()) os << v << "*";
        os << "eps";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    if (first) return "0";
    return os.str();
  }

private:
  static int check_order(int k) {
    if (k < 1 || k > kMaxOrder)
      throw std::invalid_argument("truncation order must lie in [1, " + std::to_string(kMaxOrder) +
                                  "], got " + std::to_string(k));
    return k;
  }
  void same_order(const TruncatedScalar& b) const {
    if (b.order_ != order_)
      throw std::invalid_argument("TruncatedScalar: mismatched truncation orders " + std::to_string(order_) +
                                  " and " + std::to_string(b.order_));
  }

  std::array<Rational, kMaxOrder> c_{};
  int order_ = 1;
};

}  // namespace kimura
