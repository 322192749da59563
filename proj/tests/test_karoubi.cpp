#include "kimura/karoubi.hpp"
#include "kimura/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace kimura;
using namespace kimura::karoubi;
using supercat::SuperMorphism;
using supercat::SuperSpace;
using symgroup::Partition;

namespace {

/// (dim V_λ/n!) Σ_σ χ_λ(σ) d^{c(σ)} with every ingredient from the oracles.
Rational oracle_schur_dimension(const oracle::Shape& lambda, int d) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  const auto parts = oracle::partitions(n);
  const auto table = oracle::character_table(n);
  const std::size_t row = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), lambda) - parts.begin());
  Rational sum;
  std::int64_t nf = 1;
  for (int i = 2; i <= n; ++i) nf *= i;
  for (const auto& s : oracle::permutations(n)) {
    std::vector<int> lens;
    std::vector<bool> seen(s.size(), false);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(s[j])) seen[j] = true, ++len;
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    const std::size_t col = static_cast<std::size_t>(std::find(parts.begin(), parts.end(), lens) - parts.begin());
    Rational pw(1);
    for (std::size_t c = 0; c < lens.size(); ++c) pw *= Rational(d);
    sum += Rational(table[row][col]) * pw;
  }
  return sum * Rational(oracle::syt_count(lambda), nf);
}

const std::vector<std::uint64_t> kSeeds = {0, 1, 2, 3, 4, 5};

}  // namespace

TEST(KaroubiObject, ValidatingConstructorRejectsNonIdempotents) {
  const SuperSpace x = SuperSpace::make(2, 0, 1);
  const SuperMorphism twice = Rational(2) * SuperMorphism::identity(x);
  EXPECT_THROW(KaroubiObject{twice}, std::invalid_argument);
  EXPECT_THROW(KaroubiObject{SuperMorphism::zero(x, SuperSpace::make(1, 0, 1))}, std::invalid_argument);
  EXPECT_TRUE(KaroubiObject::zero(2).is_zero());
  EXPECT_EQ(KaroubiObject::whole(SuperSpace::make(3, 2, 2)).dimension(), Rational(1));
}

TEST(KaroubiObject, PerturbedObjectsHaveTheRightRanks) {
  for (int k = 1; k <= 3; ++k)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q)
        for (auto sd : kSeeds) {
          const KaroubiObject x = perturbed_object(p, q, k, sd);
          EXPECT_EQ(x.even_rank(), p);
          EXPECT_EQ(x.odd_rank(), q);
          EXPECT_EQ(x.dimension(), Rational(p - q));
          EXPECT_EQ(x.pruned().dimension(), x.dimension());
        }
}

TEST(SchurFunctors, FrozenSmallCases) {
  EXPECT_EQ(wedge(2, KaroubiObject::whole(SuperSpace::make(3, 0, 1))).dimension(), Rational(3));
  EXPECT_TRUE(sym(3, KaroubiObject::whole(SuperSpace::make(0, 2, 1))).is_zero());
  EXPECT_TRUE(schur_apply(Partition({2}), KaroubiObject::whole(SuperSpace::make(0, 1, 1))).is_zero());
  EXPECT_TRUE(schur_apply(Partition({1, 1, 1, 1}), KaroubiObject::whole(SuperSpace::make(3, 0, 1))).is_zero());
  const KaroubiObject w2 = wedge(2, KaroubiObject::whole(SuperSpace::make(0, 2, 1)));
  EXPECT_EQ(w2.dimension(), Rational(3));
  EXPECT_EQ(w2.classical_rank(), 3);
  EXPECT_EQ(sym(2, KaroubiObject::whole(SuperSpace::make(0, 2, 1))).dimension(), Rational(1));
  EXPECT_EQ(wedge(0, KaroubiObject::whole(SuperSpace::make(2, 1, 1))).dimension(), Rational(1));
}

TEST(SchurFunctors, BinomialDimensionsOnEvenAndOddSpaces) {
  for (int d = 0; d <= 4; ++d)
    for (int n = 0; n <= 5; ++n) {
      const KaroubiObject even = KaroubiObject::whole(SuperSpace::make(d, 0, 1));
      const KaroubiObject odd = KaroubiObject::whole(SuperSpace::make(0, d, 1));
      const std::int64_t sign = n % 2 == 0 ? 1 : -1;
      EXPECT_EQ(wedge(n, even).dimension(), Rational(oracle::binomial(d, n))) << d << " " << n;
      EXPECT_EQ(sym(n, even).dimension(), Rational(oracle::binomial(d + n - 1, n))) << d << " " << n;
      // On odd spaces the roles swap and the super-dimension picks up (-1)^n.
      EXPECT_EQ(sym(n, odd).dimension(), Rational(sign * oracle::binomial(d, n))) << d << " " << n;
      EXPECT_EQ(wedge(n, odd).dimension(), Rational(sign * oracle::binomial(d + n - 1, n))) << d << " " << n;
    }
}

TEST(SchurFunctors, DimensionMatchesCharacterOracle) {
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      for (int n = 1; n <= 4; ++n) {
        if (p + q > 3 && n > 3) continue;
        const KaroubiObject x = perturbed_object(p, q, 2, 9);
        for (const auto& l : symgroup::partitions(n)) {
          const KaroubiObject s = schur_apply(l, x);
          EXPECT_TRUE(s.idempotent().is_idempotent());
          EXPECT_EQ(s.dimension(), oracle_schur_dimension(l.parts(), p - q)) << l.str() << " (" << p << "|" << q << ")";
          EXPECT_EQ(s.is_zero(), s.classical_rank() == 0);
        }
      }
}

TEST(SchurFunctors, DecomposeTheTensorPower) {
  const KaroubiObject x = perturbed_object(1, 1, 2, 4);
  for (int n = 1; n <= 3; ++n) {
    SuperMorphism sum;
    bool first = true;
    for (const auto& l : symgroup::partitions(n)) {
      const SuperMorphism d = schur_apply(l, x).idempotent();
      sum = first ? d : sum + d;
      first = false;
    }
    EXPECT_EQ(sum, karoubi::tensor_power(x.pruned(), n).idempotent());
  }
}

TEST(SchurFunctors, SizeCapIsEnforced) {
  EXPECT_THROW(wedge(6, KaroubiObject::whole(SuperSpace::make(4, 0, 1)), 1000), size_error);
}

TEST(VanishingBounds, ExteriorAndSymmetricPowers) {
  for (int k = 1; k <= 3; ++k)
    for (int d = 0; d <= 2; ++d)
      for (auto sd : kSeeds) {
        const KaroubiObject even = perturbed_object(d, 0, k, sd), odd = perturbed_object(0, d, k, sd);
        EXPECT_TRUE(wedge(d + 1, even).is_zero());
        EXPECT_FALSE(wedge(d, even).is_zero());
        EXPECT_TRUE(sym(d + 1, odd).is_zero());
        EXPECT_FALSE(sym(d, odd).is_zero());
      }
}

TEST(ParitySplit, IsAnExactDecomposition) {
  for (int k = 1; k <= 3; ++k)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (auto sd : kSeeds) {
          const KaroubiObject x = perturbed_object(p, q, k, sd);
          const ParitySplit s = split_parity(x);
          EXPECT_EQ(s.plus.dimension(), Rational(p));
          EXPECT_EQ(s.minus.dimension(), Rational(-q));
          EXPECT_TRUE(parity_split_isomorphism(x, s).exact);
          const ParitySplit other = reseeded_split(x, s, sd + 100);
          EXPECT_TRUE(lifting::corner_unit_check(s.plus.idempotent(), other.plus.idempotent()).isomorphism());
        }
}

TEST(SWedge, TopDegreeVanishesAndLazyMatchesMaterialized) {
  for (int k = 1; k <= 3; ++k)
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        for (auto sd : kSeeds) {
          const KaroubiObject x = perturbed_object(p, q, k, sd);
          const ParitySplit s = split_parity(x);
          EXPECT_TRUE(s_wedge(p + q + 1, x, s, supercat::kDefaultDimensionCap, false).is_zero());
          const SWedge below = s_wedge(p + q, x, s, supercat::kDefaultDimensionCap, false);
          EXPECT_FALSE(below.is_zero());
          EXPECT_EQ(below.dimension(), Rational(q % 2 == 1 ? -1 : 1));
          if (p + q <= 2) {
            const SWedge full = s_wedge(p + q, x, s);
            ASSERT_TRUE(full.object.has_value());
            EXPECT_EQ(full.object->dimension(), below.dimension());
          }
        }
}

TEST(Classify, KindAndKim) {
  for (int k = 1; k <= 2; ++k)
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 2; ++q)
        for (std::uint64_t sd : {0, 3}) {
          const FiniteDimReport r = classify(perturbed_object(p, q, k, sd));
          const FiniteDimKind want = q == 0 ? FiniteDimKind::even : p == 0 ? FiniteDimKind::odd : FiniteDimKind::mixed;
          EXPECT_EQ(r.kind, want) << p << " " << q;
          EXPECT_EQ(r.kim_plus, p);
          EXPECT_EQ(r.kim_minus, q);
          EXPECT_EQ(r.dim, p - q);
          EXPECT_EQ(r.evenly, q == 0);
          EXPECT_EQ(r.oddly, p == 0);
        }
}

TEST(Operations, DimensionIsAdditiveMultiplicativeAndDualInvariant) {
  const KaroubiObject x = perturbed_object(2, 1, 2, 8), y = perturbed_object(1, 1, 2, 9);
  EXPECT_EQ(direct_sum(x, y).dimension(), x.dimension() + y.dimension());
  EXPECT_EQ(tensor_k(x, y).dimension(), x.dimension() * y.dimension());
  EXPECT_TRUE(tensor_k(x, y).idempotent().is_idempotent());
  EXPECT_EQ(dual_k(x).dimension(), x.dimension());
  EXPECT_TRUE(dual_k(x).idempotent().is_idempotent());
  const KaroubiObject l = lefschetz(2);
  EXPECT_EQ(l.ambient().weight(0), 2);
  EXPECT_EQ(l.twist(), -1);
  EXPECT_EQ(tate_twist(x, 2).ambient().weight(0), x.ambient().weight(0) - 4);
  EXPECT_THROW(direct_sum(x, perturbed_object(1, 0, 3, 1)), std::invalid_argument);
}

TEST(AssembleSummand, RecoversIdentityAndRejectsDefect) {
  Rng rng(31);
  for (int k = 1; k <= 3; ++k)
    for (int i = 0; i < 20; ++i) {
      const SuperSpace x = SuperSpace::make(rng.uniform(1, 2), rng.uniform(0, 2), k);
      const SuperSpace y = SuperSpace::make(1, 1, k);
      const SuperMorphism a = random::morphism(x, y, rng), b = random::morphism(y, x, rng);
      const SuperMorphism rest = SuperMorphism::identity(x) - b * a;
      const SummandAssembly out = assemble_summand({a, SuperMorphism::identity(x)}, {b, rest});
      EXPECT_TRUE(out.gf_is_identity);
      EXPECT_TRUE(out.idempotent.is_idempotent());
      EXPECT_EQ(supercat::trace(out.idempotent), supercat::dim(x));
    }
  const SuperMorphism id = SuperMorphism::identity(SuperSpace::make(1, 1, 2));
  EXPECT_THROW(assemble_summand({id}, {Rational(2) * id}), std::invalid_argument);
  EXPECT_THROW(assemble_summand({}, {}), std::invalid_argument);
}
