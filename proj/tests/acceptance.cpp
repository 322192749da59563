// Acceptance run: one [PASS]/[FAIL] line per criterion, with the measured
// runtime against its limit. Exit status is 0 iff every line passes.

#include "kimura/cli/suites.hpp"
#include "kimura/karoubi.hpp"
#include "kimura/lifting.hpp"
#include "kimura/motives.hpp"
#include "kimura/symgroup.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

using namespace kimura;
using karoubi::KaroubiObject;
using lifting::ProjectorFamily;
using supercat::SuperMorphism;
using supercat::SuperSpace;

namespace {

struct Outcome {
  bool ok = true;
  int instances = 0;
  std::string first_failure;
  void record(bool pass, const std::string& ctx) {
    ++instances;
    if (!pass && ok) first_failure = ctx;
    ok = ok && pass;
  }
};

int failures = 0;

void criterion(int id, const char* title, std::optional<double> limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.first_failure = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = !limit_s || secs < *limit_s;
  const bool pass = out.ok && in_time && out.instances > 0;
  if (!pass) ++failures;
  std::printf("[%s] %d: %s; %d exact checks; %.2f s", pass ? "PASS" : "FAIL", id, title, out.instances, secs);
  if (limit_s) std::printf(" (limit %.0f s)", *limit_s);
  if (!out.ok) std::printf("; first failure: %s", out.first_failure.c_str());
  else if (!in_time) std::printf("; over the runtime limit");
  std::printf("\n");
  std::fflush(stdout);
}

std::string ctx(const std::string& what, std::uint64_t seed) { return what + " seed " + std::to_string(seed); }

}  // namespace

int main() {
  criterion(1, "symmetrizers d_lambda for n <= 5 are orthogonal idempotents summing to 1", 10.0, [](Outcome& o) {
    for (int n = 0; n <= 5; ++n) {
      const auto parts = symgroup::partitions(n);
      symgroup::GroupAlgebraElement sum(n);
      for (const auto& a : parts) {
        const auto da = symgroup::young_idempotent(a);
        sum = sum + da;
        for (const auto& b : parts) {
          const auto prod = da * symgroup::young_idempotent(b);
          o.record(a == b ? prod == da : prod.is_zero(), a.str() + " * " + b.str());
        }
      }
      o.record(sum == symgroup::GroupAlgebraElement::identity(n), "sum for n=" + std::to_string(n));
    }
  });

  criterion(2, "dim wedge^n (d|0) = C(d,n) and dim S^n (d|0) = C(d+n-1,n) for d <= 4, n <= 5", 30.0, [](Outcome& o) {
    for (int d = 0; d <= 4; ++d)
      for (int n = 0; n <= 5; ++n) {
        const KaroubiObject x = KaroubiObject::whole(SuperSpace::make(d, 0, 1));
        const std::string c = "d=" + std::to_string(d) + " n=" + std::to_string(n);
        o.record(karoubi::wedge(n, x).dimension() == Rational(oracle::binomial(d, n)), "wedge " + c);
        o.record(karoubi::sym(n, x).dimension() == Rational(oracle::binomial(d + n - 1, n)), "sym " + c);
      }
  });

  criterion(3, "vanishing bounds for wedge, S and s-wedge, p,q <= 2, k <= 3, 25 seeds", 120.0, [](Outcome& o) {
    for (int k = 1; k <= 3; ++k)
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
          for (std::uint64_t sd = 1; sd <= 25; ++sd) {
            const std::string c = ctx(cli::suites::pq(p, q) + " k=" + std::to_string(k), sd);
            if (q == 0) o.record(karoubi::wedge(p + 1, karoubi::perturbed_object(p, 0, k, sd)).is_zero(), "wedge " + c);
            if (p == 0) o.record(karoubi::sym(q + 1, karoubi::perturbed_object(0, q, k, sd)).is_zero(), "sym " + c);
            const KaroubiObject x = karoubi::perturbed_object(p, q, k, sd);
            const auto split = karoubi::split_parity(x);
            o.record(karoubi::s_wedge(p + q + 1, x, split, supercat::kDefaultDimensionCap, false).is_zero(), "top " + c);
            o.record(!karoubi::s_wedge(p + q, x, split, supercat::kDefaultDimensionCap, false).is_zero(), "below " + c);
          }
  });

  criterion(4, "supertrace(Gamma_sigma) = (p-q)^c(sigma) against brute force, n <= 4, (p|q) <= (2|2)", std::nullopt,
            [](Outcome& o) {
              for (int p = 0; p <= 2; ++p)
                for (int q = 0; q <= 2; ++q)
                  for (int n = 1; n <= 4; ++n)
                    for (const auto& s : oracle::permutations(n)) {
                      const SuperSpace x = SuperSpace::make(p, q, 1);
                      const TruncatedScalar got =
                          supercat::trace(supercat::permutation_action(symgroup::Permutation(s), x, n));
                      const std::int64_t brute = oracle::permutation_supertrace(s, p, q);
                      o.record(got == TruncatedScalar(Rational(brute), 1) &&
                                   Rational(brute) == cli::suites::int_power(p - q, oracle::cycles(s)),
                               cli::suites::pq(p, q) + " " + symgroup::Permutation(s).str());
                    }
            });

  criterion(5, "homologically trivial f satisfies f^k = 0, 100 seeds per k in 2..5", std::nullopt, [](Outcome& o) {
    for (int k = 2; k <= 5; ++k) {
      const SuperSpace x = SuperSpace::make(2, 2, k);
      for (std::uint64_t sd = 1; sd <= 100; ++sd) {
        Rng rng(sd);
        const SuperMorphism f = random::hom_trivial(x, rng);
        o.record(supercat::is_hom_trivial(f) && supercat::power(f, static_cast<unsigned>(k)).is_zero(),
                 ctx("k=" + std::to_string(k), sd));
      }
    }
  });

  criterion(6, "summand uniqueness: exact e = pi at k = 2, corner isomorphisms at k = 3, 4, intertwining units", 60.0,
            [](Outcome& o) {
              const SuperSpace base = motives::build_realization(motives::MotiveSpec::surface(1, 3, 2));
              for (int k = 2; k <= 4; ++k)
                for (std::uint64_t sd = 1; sd <= 25; ++sd) {
                  Rng rng(sd);
                  const ProjectorFamily res = cli::suites::rational_family(base, 4, rng);
                  const ProjectorFamily a = lifting::lift_family(res, k, sd);
                  const ProjectorFamily b = lifting::lift_family(res, k, sd * 2654435761ULL + 1);
                  const std::string c = ctx("k=" + std::to_string(k), sd);
                  for (std::size_t i = 0; i < a.size(); ++i) {
                    const auto r = lifting::corner_unit_check(a.members[i], b.members[i]);
                    if (k == 2) o.record(r.exact_equality, "exact equality " + c);
                    else o.record(r.backward * r.forward == a.members[i] && r.forward * r.backward == b.members[i],
                                  "summand isomorphism " + c);
                  }
                  const auto cu = lifting::conjugating_unit(a, b);
                  bool ok = cu.inverse * cu.unit == SuperMorphism::identity(a.ambient);
                  for (std::size_t i = 0; i < a.size(); ++i) ok = ok && cu.unit * a.members[i] == b.members[i] * cu.unit;
                  o.record(ok, "conjugating unit " + c);
                }
            });

  criterion(7, "hom-trivial maps under the block hypotheses are certified zero, 100 seeds", std::nullopt, [](Outcome& o) {
    motives::MotiveSpec spec = motives::MotiveSpec::surface(1, 3, 2);
    spec.k = 3;
    const ProjectorFamily blocks = motives::chow_kunneth(spec);
    for (std::uint64_t sd = 1; sd <= 100; ++sd) {
      Rng rng(sd);
      const SuperMorphism q = lifting::rigidify(blocks, random::hom_trivial(blocks.ambient, rng));
      const auto cert = lifting::murre_rigidity(blocks, q);
      o.record(cert.within_hypotheses && cert.hom_trivial && cert.certified_zero, ctx("", sd) + " " + cert.violation);
    }
  });

  criterion(8, "surface calculus: pi3 projector, gradeds (1,q,t), F3 = 0, wedge of d+1 cycles, p_g = 0 forces t = 0",
            std::nullopt, [](Outcome& o) {
              for (const auto& s : {motives::MotiveSpec::surface(0, 9, 9), motives::MotiveSpec::surface(1, 3, 2),
                                    motives::MotiveSpec::surface(2, 10, 9)}) {
                const auto rel = motives::surface_projector_relations(s, motives::chow_kunneth(s));
                o.record(rel.ok() && rel.pi3.is_idempotent(), "relations " + s.str());
                for (int t = 0; t <= 5; ++t) {
                  const auto cm = motives::murre_filtration(s, t);
                  o.record(cm.graded == std::vector<int>{1, s.q, t} && cm.filtration.back() == 0,
                           "filtration " + s.str() + " t=" + std::to_string(t));
                }
              }
              for (int d = 0; d <= 3; ++d)
                for (std::uint64_t sd = 1; sd <= 25; ++sd) {
                  Rng rng(sd);
                  std::vector<std::vector<Rational>> cycles(static_cast<std::size_t>(d + 1),
                                                            std::vector<Rational>(static_cast<std::size_t>(d)));
                  for (auto& c : cycles)
                    for (auto& v : c) v = Rational(rng.uniform(-3, 3));
                  o.record(motives::albanese_wedge(cycles, d).is_zero(), ctx("wedge d=" + std::to_string(d), sd));
                }
              const auto pg0 = motives::MotiveSpec::surface(0, 9, 9);
              for (int t = 0; t <= 3; ++t) {
                const auto v = motives::pg_zero_conclusion(pg0, t);
                o.record(v.applicable && v.consistent == (t == 0), "p_g = 0 with t=" + std::to_string(t));
              }
            });

  criterion(9, "n* pi_i = pi_i n* = n^i pi_i for g <= 3, n in -2..3", std::nullopt, [](Outcome& o) {
    for (int g = 1; g <= 3; ++g)
      for (int n = -2; n <= 3; ++n) {
        const auto rep = motives::abelian_multiplication_action(g, n);
        for (const auto& c : rep.checks)
          o.record(c.left && c.right, "g=" + std::to_string(g) + " n=" + std::to_string(n) + " i=" + std::to_string(c.weight));
      }
  });

  criterion(10, "assemble_summand gives g f = id on 100 seeded instances", std::nullopt, [](Outcome& o) {
    for (std::uint64_t sd = 1; sd <= 100; ++sd) {
      Rng rng(sd);
      const SuperSpace x = SuperSpace::make(rng.uniform(1, 2), rng.uniform(0, 2), 2);
      const auto inst = cli::suites::summand_instance(x, 3, rng);
      const auto out = karoubi::assemble_summand(inst.maps_in, inst.maps_out);
      o.record(out.gf_is_identity && out.g * out.f == SuperMorphism::identity(x), ctx("", sd));
    }
  });

  return failures == 0 ? 0 : 1;
}
