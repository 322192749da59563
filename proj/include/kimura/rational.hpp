#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

namespace kimura {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// kept inline and combined with 128-bit intermediates; anything larger is
/// promoted to an arbitrary-precision boost rational and demoted again as soon
/// as it fits. The representation is always normalized: the denominator is
/// positive and coprime to the numerator.
class Rational {
public:
  using Big = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == std::numeric_limits<std::int64_t>::min()) set_big(Big(n));
  }
  Rational(long long n, long long d) { assign(static_cast<i128>(n), static_cast<i128>(d)); }
  explicit Rational(const Big& b) { set_big(b); }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<Big>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      if (o.big_) {
        if (big_) *big_ = *o.big_;
        else big_ = std::make_unique<Big>(*o.big_);
      } else {
        big_.reset();
      }
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const noexcept { return !big_; }
  bool is_integer() const {
    return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
  }
  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }

  Big to_big() const { return big_ ? *big_ : Big(num_) / Big(den_); }

  /// Numerator and denominator as decimal strings.
  std::string numerator_str() const {
    return big_ ? boost::multiprecision::numerator(*big_).str() : std::to_string(num_);
  }
  std::string denominator_str() const {
    return big_ ? boost::multiprecision::denominator(*big_).str() : std::to_string(den_);
  }
  std::string str() const {
    if (is_integer()) return numerator_str();
    return numerator_str() + "/" + denominator_str();
  }

  /// Value as a 64-bit integer; throws if it is not an integer in range.
  std::int64_t to_int64() const {
    if (big_ || den_ != 1) throw std::domain_error("Rational::to_int64: not a small integer: " + str());
    return num_;
  }

  Rational operator-() const {
    if (big_) return Rational(Big(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.big_ && !b.big_) {
      // Knuth 4.5.1: gcd work stays within the small denominators.
      const std::int64_t g = gcd64(a.den_, b.den_);
      const i128 t = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
      if (t == 0) return Rational();
      const std::int64_t g2 = gcd64(static_cast<std::int64_t>(abs128(t) % g), g);
      const i128 num = t / g2;
      const i128 den = static_cast<i128>(a.den_ / g) * (b.den_ / g2);
      Rational r;
      r.store(num, den);
      return r;
    }
    return Rational(Big(a.to_big() + b.to_big()));
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (!a.big_ && !b.big_) {
      const std::int64_t g1 = gcd64(abs64(a.num_), b.den_);
      const std::int64_t g2 = gcd64(abs64(b.num_), a.den_);
      const i128 num = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
      const i128 den = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
      Rational r;
      r.store(num, den);
      return r;
    }
    return Rational(Big(a.to_big() * b.to_big()));
  }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: division by zero");
    if (big_) return Rational(Big(1 / *big_));
    Rational r;
    r.assign(static_cast<i128>(den_), static_cast<i128>(num_));
    return r;
  }

  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    // Normalized big values never fit in the small form, so mixed pairs differ.
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      const i128 l = static_cast<i128>(a.num_) * b.den_;
      const i128 r = static_cast<i128>(b.num_) * a.den_;
      return l <=> r;
    }
    const Big l = a.to_big();
    const Big r = b.to_big();
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  using i128 = __int128;

  static std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }
  static unsigned __int128 abs128(i128 v) {
    return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  }
  static std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
      const std::int64_t t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }
  static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      const unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static bool fits(i128 v) {
    return v > static_cast<i128>(std::numeric_limits<std::int64_t>::min()) &&
           v <= static_cast<i128>(std::numeric_limits<std::int64_t>::max());
  }
  static boost::multiprecision::cpp_int to_cpp_int(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 m = abs128(v);
    boost::multiprecision::cpp_int r = static_cast<std::uint64_t>(m >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(m);
    return neg ? boost::multiprecision::cpp_int(-r) : r;
  }

  // Normalizes an arbitrary numerator/denominator pair.
  void assign(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const unsigned __int128 g = gcd128(abs128(n), static_cast<unsigned __int128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    store(n, d);
  }

  // Stores an already reduced pair with positive denominator.
  void store(i128 n, i128 d) {
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
      return;
    }
    big_ = std::make_unique<Big>(to_cpp_int(n), to_cpp_int(d));
    num_ = 0;
    den_ = 1;
  }

  void set_big(const Big& b) {
    const auto& n = boost::multiprecision::numerator(b);
    const auto& d = boost::multiprecision::denominator(b);
    static const boost::multiprecision::cpp_int lo = std::numeric_limits<std::int64_t>::min();
    static const boost::multiprecision::cpp_int hi = std::numeric_limits<std::int64_t>::max();
    if (n > lo && n <= hi && d <= hi) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      big_ = std::make_unique<Big>(b);
      num_ = 0;
      den_ = 1;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Big> big_;
};

}  // namespace kimura
