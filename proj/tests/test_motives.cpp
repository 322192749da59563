#include "kimura/motives.hpp"

#include <gtest/gtest.h>

using namespace kimura;
using namespace kimura::motives;
using supercat::Parity;
using supercat::SuperMorphism;
using supercat::SuperSpace;

namespace {

std::vector<int> weight_dims(const SuperSpace& x, int top) {
  std::vector<int> d(static_cast<std::size_t>(top + 1), 0);
  for (std::size_t i = 0; i < x.dimension(); ++i) ++d[static_cast<std::size_t>(x.weight(i))];
  return d;
}

std::vector<std::vector<Rational>> random_cycles(int count, int t, Rng& rng) {
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(count), std::vector<Rational>(static_cast<std::size_t>(t)));
  for (auto& v : c)
    for (auto& e : v) e = Rational(rng.uniform(-3, 3));
  return c;
}

}  // namespace

TEST(Realization, WeightsAndParities) {
  const SuperSpace pt = build_realization(MotiveSpec::point());
  EXPECT_EQ(pt.dimension(), 1u);
  EXPECT_EQ(pt.weight(0), 0);
  const SuperSpace c = build_realization(MotiveSpec::curve(1));
  EXPECT_EQ(weight_dims(c, 2), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(c.parity(0), Parity::even);
  EXPECT_EQ(c.parity(1), Parity::odd);
  EXPECT_EQ(c.parity(3), Parity::even);
  EXPECT_EQ(weight_dims(build_realization(MotiveSpec::surface(0, 9, 9)), 4), (std::vector<int>{1, 0, 9, 0, 1}));
  EXPECT_EQ(weight_dims(build_realization(MotiveSpec::surface(2, 10, 9)), 4), (std::vector<int>{1, 4, 10, 4, 1}));
  EXPECT_EQ(weight_dims(build_realization(MotiveSpec::abelian(2)), 4), (std::vector<int>{1, 4, 6, 4, 1}));
  EXPECT_EQ(build_realization(MotiveSpec::lefschetz(2)).weight(0), 4);
  EXPECT_EQ(abelian_basis_masks(1), (std::vector<unsigned>{0b00, 0b01, 0b10, 0b11}));
  EXPECT_THROW(build_realization(MotiveSpec::surface(0, 3, 4)), std::invalid_argument);
  EXPECT_THROW(build_realization(MotiveSpec::abelian(4)), std::invalid_argument);
}

TEST(Transpose, IsAnInvolutiveAntiHomomorphism) {
  Rng rng(41);
  MotiveSpec spec = MotiveSpec::surface(1, 3, 2);
  spec.k = 3;
  const SuperSpace x = build_realization(spec);
  for (int i = 0; i < 20; ++i) {
    const SuperMorphism f = random::morphism(x, x, rng), g = random::morphism(x, x, rng);
    EXPECT_EQ(transpose(transpose(f, 2), 2), f);
    EXPECT_EQ(transpose(g * f, 2), transpose(f, 2) * transpose(g, 2));
    const SuperMorphism u = isometric_unit(x, 2, rng);
    EXPECT_EQ(transpose(u, 2) * u, SuperMorphism::identity(x));
  }
  for (int w = 0; w <= 4; ++w)
    EXPECT_EQ(transpose(supercat::weight_projector(x, w), 2), supercat::weight_projector(x, 4 - w));
}

TEST(ChowKunneth, PointAndUnperturbedSurface) {
  const auto pt = chow_kunneth(MotiveSpec::point());
  ASSERT_EQ(pt.size(), 1u);
  EXPECT_EQ(pt.members[0], SuperMorphism::identity(pt.ambient));
  const MotiveSpec s = MotiveSpec::surface(1, 3, 2);
  const auto fam = chow_kunneth(s);
  ASSERT_EQ(fam.size(), 5u);
  for (int w = 0; w <= 4; ++w) EXPECT_EQ(member(fam, w), supercat::weight_projector(fam.ambient, w));
  EXPECT_EQ(chow_kunneth(MotiveSpec::lefschetz(1)).labels, std::vector<int>{2});
}

TEST(ChowKunneth, SeededFamiliesAreValidAndIsomorphicMemberwise) {
  for (const auto& base : {MotiveSpec::curve(2), MotiveSpec::surface(1, 3, 2), MotiveSpec::abelian(2)})
    for (int k = 1; k <= 3; ++k)
      for (std::uint64_t sd = 1; sd <= 5; ++sd)
        for (auto kind : {Perturbation::general, Perturbation::isometric}) {
          MotiveSpec a = base, b = base;
          a.k = b.k = k;
          a.seed = sd;
          b.seed = sd + 500;
          const auto fa = chow_kunneth(a, kind), fb = chow_kunneth(b, kind);
          EXPECT_TRUE(lifting::check_family(fa).ok());
          for (std::size_t i = 0; i < fa.size(); ++i)
            EXPECT_TRUE(lifting::corner_unit_check(fa.members[i], fb.members[i]).isomorphism());
        }
}

TEST(SurfaceRelations, HoldUnperturbedAndUnderIsometricPerturbation) {
  for (const auto& base : {MotiveSpec::surface(0, 9, 9), MotiveSpec::surface(1, 3, 2), MotiveSpec::surface(2, 10, 9)}) {
    const auto rel = surface_projector_relations(base, chow_kunneth(base));
    EXPECT_TRUE(rel.ok());
    if (base.q == 0) {
      EXPECT_TRUE(rel.pi3.is_zero());
      EXPECT_TRUE(member(chow_kunneth(base), 1).is_zero());
    }
    for (int k = 2; k <= 3; ++k)
      for (std::uint64_t sd = 1; sd <= 5; ++sd) {
        MotiveSpec s = base;
        s.k = k;
        s.seed = sd;
        const auto r = surface_projector_relations(s, chow_kunneth(s, Perturbation::isometric));
        for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << c.name << " " << c.defect;
      }
  }
  EXPECT_THROW(surface_projector_relations(MotiveSpec::curve(1), chow_kunneth(MotiveSpec::curve(1))), std::invalid_argument);
}

TEST(MurreFiltration, GradedPiecesAndTopVanishing) {
  const ChowModel m = murre_filtration(MotiveSpec::surface(2, 10, 9), 5);
  EXPECT_EQ(m.graded, (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(m.filtration, (std::vector<int>{8, 7, 5, 0}));
  for (int q = 0; q <= 2; ++q)
    for (int t = 0; t <= 3; ++t) {
      const ChowModel c = murre_filtration(MotiveSpec::surface(q, 4, 2), t);
      EXPECT_EQ(c.graded, (std::vector<int>{1, q, t}));
      EXPECT_EQ(c.filtration.back(), 0);
      EXPECT_EQ(c.filtration.front(), c.total());
    }
}

TEST(MurreFiltration, HomTrivialCorrespondencesKillGradeds) {
  for (std::uint64_t sd = 1; sd <= 10; ++sd) {
    MotiveSpec s = MotiveSpec::surface(1, 3, 2);
    s.k = 3;
    s.seed = sd;
    Rng rng(sd);
    const ChowModel m = murre_filtration(s, 1);
    for (const auto& g : graded_action(s, m, random::hom_trivial(build_realization(s), rng))) EXPECT_TRUE(g.is_zero());
  }
}

TEST(SplitM2, NeronSeveriLinesSplitOff) {
  const M2Split none = split_M2(MotiveSpec::surface(0, 9, 9));
  EXPECT_TRUE(none.n.is_zero());
  EXPECT_TRUE(none.relations_exact);
  MotiveSpec s = MotiveSpec::surface(2, 10, 9);
  s.k = 3;
  s.seed = 5;
  const M2Split m = split_M2(s);
  EXPECT_TRUE(m.relations_exact);
  EXPECT_EQ(m.n.dimension(), Rational(1));
  EXPECT_EQ(m.n_report.kind, karoubi::FiniteDimKind::even);
  EXPECT_EQ(m.f.size(), 9u);
  EXPECT_EQ(m.m2.dimension(), Rational(10));
}

TEST(AlbaneseWedge, VanishingAndNonVanishing) {
  const std::vector<Rational> a = {Rational(1), Rational(2)}, b = {Rational(0), Rational(1)};
  EXPECT_TRUE(albanese_wedge({a, a}, 2).is_zero());
  const AlbaneseWedge ab = albanese_wedge({a, b}, 2);
  EXPECT_FALSE(ab.is_zero());
  // (a⊗b − b⊗a)/2 has coefficient det/2 = 1/2 on e1⊗e2
  EXPECT_EQ(ab.coefficients.at({0, 1}), Rational(1, 2));
  EXPECT_EQ(ab.coefficients.at({1, 0}), Rational(-1, 2));
  EXPECT_TRUE(albanese_wedge({a, b, {Rational(3), Rational(-1)}}, 2).is_zero());
  Rng rng(3);
  for (int d = 0; d <= 3; ++d)
    for (int i = 0; i < 25; ++i) EXPECT_TRUE(albanese_wedge(random_cycles(d + 1, d, rng), d).is_zero());
  MotiveSpec s = MotiveSpec::surface(0, 9, 9);
  s.t = 2;
  EXPECT_THROW(albanese_wedge(random_cycles(1, 2, rng), s), hypothesis_error);
  s.finite = false;
  EXPECT_FALSE(albanese_wedge({a}, s).is_zero());
}

TEST(PgZero, FiniteDimensionalityForcesTrivialAlbaneseKernel) {
  const MotiveSpec s = MotiveSpec::surface(0, 9, 9);
  const PgZeroVerdict ok = pg_zero_conclusion(s, 0);
  EXPECT_TRUE(ok.applicable);
  EXPECT_TRUE(ok.consistent);
  EXPECT_EQ(ok.shape.value_or(""), "1 ⊕ 9L ⊕ L²");
  for (int t = 1; t <= 3; ++t) {
    const PgZeroVerdict bad = pg_zero_conclusion(s, t);
    EXPECT_TRUE(bad.applicable);
    EXPECT_FALSE(bad.consistent);
  }
  const PgZeroVerdict other = pg_zero_conclusion(MotiveSpec::surface(0, 10, 9), 0);
  EXPECT_FALSE(other.applicable);
  MotiveSpec loose = s;
  loose.finite = false;
  EXPECT_TRUE(pg_zero_conclusion(loose, 3).consistent);
}

TEST(AbelianMultiplication, ActsByPowersOnEveryProjector) {
  for (int g = 1; g <= 3; ++g)
    for (int n = -2; n <= 3; ++n) {
      const AbelianReport r = abelian_multiplication_action(g, n);
      EXPECT_TRUE(r.ok()) << "g=" << g << " n=" << n;
      EXPECT_EQ(r.checks.size(), static_cast<std::size_t>(2 * g + 1));
    }
  const AbelianReport r = abelian_multiplication_action(1, 2);
  std::vector<Rational> ev;
  for (const auto& c : r.checks) ev.push_back(c.eigenvalue);
  EXPECT_EQ(ev, (std::vector<Rational>{Rational(1), Rational(2), Rational(4)}));
  const AbelianReport neg = abelian_multiplication_action(2, -1);
  const SuperSpace& x = neg.n_star.source();
  for (std::size_t i = 0; i < x.dimension(); ++i)
    EXPECT_EQ(neg.n_star.matrix().get(i, i)[0], Rational(x.parity(i) == Parity::odd ? -1 : 1));
}

TEST(MotiveSpec, ValidationAndDescription) {
  MotiveSpec s = MotiveSpec::surface(2, 10, 9);
  s.k = 3;
  s.seed = 5;
  EXPECT_EQ(s.str(), "surface(q=2,b2=10,rho=9) k=3 seed=5");
  s.pg = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.pg = 1;
  EXPECT_NO_THROW(s.validate());
  s.k = 7;
  EXPECT_THROW(s.validate(), std::invalid_argument);
}
