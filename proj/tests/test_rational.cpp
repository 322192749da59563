#include "kimura/matrix.hpp"
#include "kimura/random.hpp"
#include "kimura/rational.hpp"
#include "kimura/truncated.hpp"

#include <gtest/gtest.h>

#include <limits>

using kimura::Matrix;
using kimura::Rational;
using kimura::Rng;
using kimura::TruncatedScalar;
using Big = Rational::Big;

namespace {

Rational draw(Rng& rng, bool huge) {
  const long long scale = huge ? (1LL << 40) : 50;
  long long n = static_cast<long long>(rng.next() % static_cast<std::uint64_t>(2 * scale + 1)) - scale;
  long long d = static_cast<long long>(rng.next() % static_cast<std::uint64_t>(scale)) + 1;
  return Rational(n, d);
}

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(0, -7).str(), "0");
  EXPECT_EQ(Rational(10, 5), Rational(2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational().reciprocal(), std::domain_error);
}

TEST(Rational, AgreesWithBoostOnRandomExpressions) {
  Rng rng(20261014);
  for (int i = 0; i < 2000; ++i) {
    const bool huge = i % 3 == 0;
    const Rational a = draw(rng, huge), b = draw(rng, huge), c = draw(rng, !huge);
    const Big ba = a.to_big(), bb = b.to_big(), bc = c.to_big();
    const Rational e = (a * b + c) * (a - c) * b;
    EXPECT_EQ(e.to_big(), (ba * bb + bc) * (ba - bc) * bb);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b).to_big(), ba / bb);
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ(a < b, ba < bb);
  }
}

TEST(Rational, PromotesAndDemotesAcrossWordSize) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.numerator_str(), "85070591730234615847396907784232501249");
  const Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  EXPECT_EQ(sq - sq, Rational());
  const Rational minv(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ((-minv).to_big(), -Big(std::numeric_limits<std::int64_t>::min()));
}

TEST(TruncatedScalar, EpsilonIsNilpotentOfExactIndex) {
  for (int k = 1; k <= kimura::kMaxOrder; ++k) {
    const TruncatedScalar eps = TruncatedScalar::epsilon_power(1, k);
    TruncatedScalar p(Rational(1), k);
    for (int m = 1; m < k; ++m) {
      p = p * eps;
      EXPECT_FALSE(p.is_zero()) << "k=" << k << " m=" << m;
    }
    EXPECT_TRUE((p * eps).is_zero()) << "k=" << k;
  }
}

TEST(TruncatedScalar, InverseOfUnit) {
  Rng rng(7);
  for (int k = 1; k <= kimura::kMaxOrder; ++k)
    for (int i = 0; i < 20; ++i) {
      TruncatedScalar a(Rational(rng.uniform(1, 5)), k);
      for (int m = 1; m < k; ++m) a.coefficient(m) = Rational(rng.uniform(-3, 3), rng.uniform(1, 4));
      EXPECT_EQ(a * a.inverse(), TruncatedScalar(Rational(1), k));
    }
  EXPECT_THROW(TruncatedScalar::epsilon_power(1, 3).inverse(), std::domain_error);
  EXPECT_THROW(TruncatedScalar(0), std::invalid_argument);
  EXPECT_THROW(TruncatedScalar(kimura::kMaxOrder + 1), std::invalid_argument);
}

TEST(Matrix, InverseAndDeterminant) {
  Rng rng(3);
  for (int k = 1; k <= 4; ++k)
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 4;
      Matrix m = Matrix::identity(n, k);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          TruncatedScalar v(Rational(i == j ? rng.uniform(1, 3) : (i < j ? rng.uniform(-2, 2) : 0)), k);
          for (int e = 1; e < k; ++e) v.coefficient(e) = Rational(rng.uniform(-2, 2));
          m.set(i, j, v);
        }
      EXPECT_EQ(m * kimura::linalg::inverse(m), Matrix::identity(n, k));
    }
  const Matrix a = Matrix::from_rows({{Rational(2), Rational(1)}, {Rational(7), Rational(4)}}, 2, 1);
  EXPECT_EQ(kimura::linalg::determinant(kimura::linalg::to_dense(a)), Rational(1));
  EXPECT_EQ(kimura::linalg::rank(a), 2u);
  const Matrix b = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, 2, 1);
  EXPECT_EQ(kimura::linalg::rank(b), 1u);
  EXPECT_EQ(kimura::linalg::kernel(b).size(), 1u);
}
