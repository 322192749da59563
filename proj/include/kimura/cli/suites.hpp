#pragma once

#include "kimura/cli/report.hpp"
#include "kimura/karoubi.hpp"
#include "kimura/lifting.hpp"
#include "kimura/motives.hpp"
#include "kimura/random.hpp"
#include "kimura/symgroup.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Verification suites run by `kimura verify <suite>`. Each suite sweeps a
// parameter grid and a list of seeds and records one check per invariant and
// parameter point, with the number of instances that passed.

namespace kimura::cli {

/// Upper bounds such as "p=2,q=2,k=3".
class Grid {
public:
  Grid() = default;
  static Grid parse(const std::string& text) {
    Grid g;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string::npos) end = text.size();
      const std::string item = text.substr(pos, end - pos);
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
        throw std::invalid_argument("grid: expected name=value, got '" + item + "'");
      int v = 0;
      const char* b = item.data() + eq + 1;
      const char* e = item.data() + item.size();
      const auto [ptr, ec] = std::from_chars(b, e, v);
      if (ec != std::errc() || ptr != e || v < 0)
        throw std::invalid_argument("grid: bound of '" + item.substr(0, eq) + "' must be a nonnegative integer");
      g.bounds_[item.substr(0, eq)] = v;
      pos = end + 1;
    }
    return g;
  }
  int get(const std::string& key, int fallback) const {
    const auto it = bounds_.find(key);
    return it == bounds_.end() ? fallback : it->second;
  }
  const std::map<std::string, int>& bounds() const { return bounds_; }

private:
  std::map<std::string, int> bounds_;
};

struct SuiteConfig {
  Grid grid;
  std::optional<int> seeds;  ///< number of seeds; each suite has its own default
  std::uint64_t seed = 0;    ///< base seed; instance seeds are base+1, …, base+count
  std::size_t cap = supercat::kDefaultDimensionCap;

  std::vector<std::uint64_t> seed_list(int fallback) const {
    const int n = seeds.value_or(fallback);
    std::vector<std::uint64_t> out;
    for (int i = 1; i <= n; ++i) out.push_back(seed + static_cast<std::uint64_t>(i));
    return out;
  }
};

/// Pass count of one invariant at one parameter point.
class Tally {
public:
  void record(bool ok, const std::string& context, const std::string& defect = {}) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = context + (defect.empty() ? "" : ": " + defect);
    }
  }
  Check check(const std::string& key) const {
    const std::string detail = std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " instances";
    return {key, failed_ == 0 && total_ > 0, detail, first_failure_};
  }
  int total() const { return total_; }
  int failed() const { return failed_; }

private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_failure_;
};

class Tallies {
public:
  Tally& operator[](const std::string& key) { return map_[key]; }
  void emit(Report& r) const {
    for (const auto& [key, t] : map_) r.add(t.check(key));
  }

private:
  std::map<std::string, Tally> map_;
};

namespace suites {

using karoubi::KaroubiObject;
using lifting::ProjectorFamily;
using supercat::SuperMorphism;
using supercat::SuperSpace;
using symgroup::Partition;

inline long long binomial(long long n, long long k) {
  if (k == 0) return 1;
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Rational int_power(long long base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= Rational(base);
  return r;
}

inline std::string pq(int p, int q) { return "(" + std::to_string(p) + "|" + std::to_string(q) + ")"; }
inline std::string seed_ctx(std::uint64_t s) { return "seed " + std::to_string(s); }

/// Rational idempotent T E_S T⁻¹ on x with a seeded unipotent, parity-block
/// preserving T and a seeded coordinate subset S.
inline Matrix unipotent(const SuperSpace& x, Rng& rng) {
  const std::size_t d = x.dimension();
  Matrix t = Matrix::identity(d, 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (x.parity(i) == x.parity(j) && x.weight(i) == x.weight(j))
        t.set(i, j, TruncatedScalar(Rational(rng.perturbation_entry()), 1));
  return t;
}

/// Complete orthogonal family over Q: T E_{S_c} T⁻¹ for a seeded colouring of
/// the coordinates into `parts` classes (some classes may be empty).
inline ProjectorFamily rational_family(const SuperSpace& x, int parts, Rng& rng) {
  const SuperSpace x1 = x.with_order(1);
  const Matrix t = unipotent(x1, rng);
  const Matrix ti = linalg::inverse_rational(t);
  std::vector<int> colour(x1.dimension());
  for (auto& c : colour) c = rng.uniform(0, parts - 1);
  ProjectorFamily fam{x1, {}, {}};
  for (int c = 0; c < parts; ++c) {
    Matrix e(x1.dimension(), x1.dimension(), 1);
    for (std::size_t i = 0; i < colour.size(); ++i)
      if (colour[i] == c) e.set(i, i, TruncatedScalar(Rational(1), 1));
    fam.members.push_back(SuperMorphism(x1, x1, t * e * ti, supercat::trusted));
    fam.labels.push_back(c);
  }
  return fam;
}

// ---------------------------------------------------------------- symgroup

inline void symgroup_suite(const SuiteConfig& cfg, Report& rep) {
  Tallies t;
  const int nmax = cfg.grid.get("n", 5);
  const int cmax = cfg.grid.get("chars", 6);
  const int hmax = cfg.grid.get("hooks", 8);
  for (int n = 0; n <= nmax; ++n) {
    const auto parts = symgroup::partitions(n);
    std::vector<symgroup::GroupAlgebraElement> d;
    for (const auto& l : parts) d.push_back(symgroup::young_idempotent(l, std::max(nmax, symgroup::kDefaultAlgebraBound)));
    symgroup::GroupAlgebraElement sum(n);
    for (std::size_t a = 0; a < d.size(); ++a) {
      sum = sum + d[a];
      for (std::size_t b = 0; b < d.size(); ++b) {
        const auto prod = d[a] * d[b];
        if (a == b) t["idempotent/n=" + std::to_string(n)].record(prod == d[a], parts[a].str());
        else
          t["orthogonal/n=" + std::to_string(n)].record(prod.is_zero(), parts[a].str() + " * " + parts[b].str());
      }
    }
    t["complete/n=" + std::to_string(n)].record(sum == symgroup::GroupAlgebraElement::identity(n), "sum of d_lambda");
  }
  for (int n = 1; n <= cmax; ++n) {
    const auto parts = symgroup::partitions(n);
    const long long nf = symgroup::factorial(n);
    for (const auto& l : parts)
      for (const auto& m : parts) {
        long long s = 0;
        for (const auto& ct : parts) s += symgroup::class_size(ct) * symgroup::character(l, ct) * symgroup::character(m, ct);
        t["column-orthogonality/n=" + std::to_string(n)].record(s == (l == m ? nf : 0), l.str() + "," + m.str(),
                                                                 "sum = " + std::to_string(s));
      }
    for (const auto& l : parts)
      t["character-degree/n=" + std::to_string(n)].record(
          symgroup::character(l, Partition::column(n)) == symgroup::hook_dimension(l), l.str());
  }
  for (int n = 0; n <= hmax; ++n) {
    long long s = 0;
    for (const auto& l : symgroup::partitions(n)) s += symgroup::hook_dimension(l) * symgroup::hook_dimension(l);
    t["hook-squares/n=" + std::to_string(n)].record(s == symgroup::factorial(n), "n=" + std::to_string(n),
                                                     "sum = " + std::to_string(s));
  }
  t.emit(rep);
}

// ---------------------------------------------------------------- supercat

inline void supercat_suite(const SuiteConfig& cfg, Report& rep) {
  Tallies t;
  const int pmax = cfg.grid.get("p", 2), qmax = cfg.grid.get("q", 2), nmax = cfg.grid.get("n", 4);
  const int kmax = cfg.grid.get("k", 2);
  const auto seeds = cfg.seed_list(10);
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q) {
      const SuperSpace x = SuperSpace::make(p, q, 1);
      const std::string tag = pq(p, q);
      for (int n = 1; n <= nmax; ++n) {
        if (supercat::checked_power(x.dimension(), n, std::numeric_limits<std::size_t>::max()) > cfg.cap) continue;
        for (const auto& s : symgroup::permutations(n)) {
          const SuperMorphism g = supercat::permutation_action(s, x, n, cfg.cap);
          const Rational expect = int_power(p - q, s.cycles());
          const TruncatedScalar got = supercat::trace(g);
          t["supertrace-cycles/" + tag + "/n=" + std::to_string(n)].record(got == TruncatedScalar(expect, 1), s.str(),
                                                                            "trace = " + got.str());
          if (g.source().dimension() <= 27)
            t["categorical-trace/" + tag].record(supercat::categorical_trace(g) == got, s.str());
        }
      }
      const SuperMorphism c = supercat::braiding(x, x);
      t["braiding-involution/" + tag].record(c * c == SuperMorphism::identity(supercat::tensor(x, x)), tag);
      const SuperSpace xd = supercat::dual(x);
      const SuperMorphism snake1 = supercat::tensor_mor(supercat::evaluation(x), SuperMorphism::identity(x)) *
                                   supercat::tensor_mor(SuperMorphism::identity(x), supercat::coevaluation(x));
      const SuperMorphism snake2 = supercat::tensor_mor(SuperMorphism::identity(xd), supercat::evaluation(x)) *
                                   supercat::tensor_mor(supercat::coevaluation(x), SuperMorphism::identity(xd));
      t["snake/" + tag].record(snake1.matrix() == Matrix::identity(x.dimension(), 1) &&
                                   snake2.matrix() == Matrix::identity(x.dimension(), 1),
                               tag);
      t["dim-dual/" + tag].record(supercat::dim(xd) == supercat::dim(x), tag);
      for (int p2 = 0; p2 <= pmax; ++p2)
        for (int q2 = 0; q2 <= qmax; ++q2) {
          const SuperSpace y = SuperSpace::make(p2, q2, 1);
          t["dim-multiplicative"].record(supercat::dim(supercat::tensor(x, y)) == supercat::dim(x) * supercat::dim(y),
                                         tag + pq(p2, q2));
        }
      for (int k = 1; k <= kmax; ++k) {
        const SuperSpace xk = x.with_order(k);
        for (auto sd : seeds) {
          Rng rng(sd);
          const SuperMorphism f = random::morphism(xk, xk, rng), g = random::morphism(xk, xk, rng);
          const std::string ctx = tag + " k=" + std::to_string(k) + " " + seed_ctx(sd);
          t["trace-cyclic/k=" + std::to_string(k)].record(supercat::trace(f * g) == supercat::trace(g * f), ctx);
          t["realization-functor/k=" + std::to_string(k)].record(
              supercat::realization(g * f) == supercat::realization(g) * supercat::realization(f) &&
                  supercat::trace(supercat::realization(f)) == supercat::trace(f).with_order(1) &&
                  supercat::realization(supercat::tensor_mor(f, g)) ==
                      supercat::tensor_mor(supercat::realization(f), supercat::realization(g)),
              ctx);
          t["braiding-naturality/k=" + std::to_string(k)].record(
              supercat::tensor_mor(g, f) * supercat::braiding(xk, xk) ==
                  supercat::braiding(xk, xk) * supercat::tensor_mor(f, g),
              ctx);
          if (xk.dimension() <= 4) t["categorical-trace-random/k=" + std::to_string(k)].record(
              supercat::categorical_trace(f) == supercat::trace(f), ctx);
        }
      }
    }
  // Γ is a homomorphism on (1|1)^⊗3.
  const SuperSpace x11 = SuperSpace::make(1, 1, 1);
  for (const auto& s : symgroup::permutations(3))
    for (const auto& u : symgroup::permutations(3))
      t["permutation-homomorphism/(1|1)/n=3"].record(
          supercat::permutation_action(s, x11, 3) * supercat::permutation_action(u, x11, 3) ==
              supercat::permutation_action(s * u, x11, 3),
          s.str() + "," + u.str());
  t.emit(rep);
}

// ---------------------------------------------------------------- kimura-dim

/// Trace of D_λ from characters: (dim V_λ / n!) Σ_σ χ_λ(σ) dim(X)^{c(σ)}.
inline Rational schur_dimension_formula(const Partition& l, const Rational& dim_x) {
  const int n = l.size();
  Rational s;
  for (const auto& ct : symgroup::partitions(n)) {
    Rational pw(1);
    for (std::size_t i = 0; i < ct.length(); ++i) pw *= dim_x;
    s += Rational(symgroup::class_size(ct) * symgroup::character(l, ct)) * pw;
  }
  return s * Rational(symgroup::hook_dimension(l)) / Rational(symgroup::factorial(n));
}

inline void kimura_dim_suite(const SuiteConfig& cfg, Report& rep) {
  Tallies t;
  const int pmax = cfg.grid.get("p", 3), qmax = cfg.grid.get("q", 3), kmax = cfg.grid.get("k", 3);
  const int dmax = cfg.grid.get("d", 4), nmax = cfg.grid.get("n", 5), lmax = cfg.grid.get("lambda", 4);
  auto seeds = cfg.seed_list(25);
  seeds.insert(seeds.begin(), 0);
  // Binomial dimension identities on unperturbed even and odd spaces.
  for (int d = 0; d <= dmax; ++d)
    for (int n = 0; n <= nmax; ++n) {
      const std::string key = "/d=" + std::to_string(d);
      const KaroubiObject even = KaroubiObject::whole(SuperSpace::make(d, 0, 1));
      const KaroubiObject odd = KaroubiObject::whole(SuperSpace::make(0, d, 1));
      const std::string ctx = "n=" + std::to_string(n);
      if (supercat::checked_power(static_cast<std::size_t>(d), n, std::numeric_limits<std::size_t>::max()) > cfg.cap)
        continue;
      const Rational w = karoubi::wedge(n, even, cfg.cap).dimension();
      const Rational s = karoubi::sym(n, even, cfg.cap).dimension();
      t["wedge-binomial" + key].record(w == Rational(binomial(d, n)), ctx, "dim = " + w.str());
      t["sym-binomial" + key].record(s == Rational(binomial(d + n - 1, n)), ctx, "dim = " + s.str());
      const KaroubiObject so = karoubi::sym(n, odd, cfg.cap), wo = karoubi::wedge(n, odd, cfg.cap);
      const long long sign = n % 2 == 0 ? 1 : -1;
      t["sym-odd" + key].record(so.dimension() == Rational(sign * binomial(d, n)) &&
                                    so.classical_rank() == binomial(d, n),
                                ctx, "dim = " + so.dimension().str());
      t["wedge-odd" + key].record(wo.dimension() == Rational(sign * binomial(d + n - 1, n)) &&
                                      wo.classical_rank() == binomial(d + n - 1, n),
                                  ctx, "dim = " + wo.dimension().str());
    }
  for (int k = 1; k <= kmax; ++k)
    for (int p = 0; p <= pmax; ++p)
      for (int q = 0; q <= qmax; ++q) {
        const std::string tag = pq(p, q) + "/k=" + std::to_string(k);
        for (auto sd : seeds) {
          const std::string ctx = seed_ctx(sd);
          const KaroubiObject x = karoubi::perturbed_object(p, q, k, sd);
          if (q == 0) t["wedge-vanishing/" + tag].record(karoubi::wedge(p + 1, x, cfg.cap).is_zero(), ctx);
          if (p == 0) t["sym-vanishing/" + tag].record(karoubi::sym(q + 1, x, cfg.cap).is_zero(), ctx);
          const karoubi::ParitySplit split = karoubi::split_parity(x);
          t["parity-split/" + tag].record(split.plus.dimension() == Rational(p) &&
                                              split.minus.dimension() == Rational(-q) &&
                                              karoubi::parity_split_isomorphism(x, split).exact,
                                          ctx);
          if (sd != 0) {
            const karoubi::ParitySplit other = karoubi::reseeded_split(x, split, sd ^ 0x9e3779b97f4a7c15ULL);
            const auto cp = lifting::corner_unit_check(split.plus.idempotent(), other.plus.idempotent());
            const auto cm = lifting::corner_unit_check(split.minus.idempotent(), other.minus.idempotent());
            t["parity-uniqueness/" + tag].record(cp.isomorphism() && cm.isomorphism(), ctx);
          }
          const karoubi::FiniteDimReport fd = karoubi::classify(x, cfg.cap);
          const auto expected_kind = q == 0 ? karoubi::FiniteDimKind::even
                                     : p == 0 ? karoubi::FiniteDimKind::odd
                                              : karoubi::FiniteDimKind::mixed;
          t["classify/" + tag].record(fd.kind == expected_kind && fd.kim_plus == p && fd.kim_minus == q &&
                                          fd.dim == p - q && fd.trace_dimension == Rational(p - q),
                                      ctx, std::string(karoubi::to_string(fd.kind)));
          const karoubi::SWedge top = karoubi::s_wedge(p + q + 1, x, split, cfg.cap, false);
          const karoubi::SWedge below = karoubi::s_wedge(p + q, x, split, cfg.cap, false);
          t["s-wedge-bound/" + tag].record(top.is_zero() && !below.is_zero(), ctx);
          if (sd == 0 || sd == seeds[1]) {
            for (int n = 1; n <= lmax; ++n)
              for (const auto& l : symgroup::partitions(n)) {
                if (supercat::checked_power(x.pruned().ambient().dimension(), n,
                                            std::numeric_limits<std::size_t>::max()) > cfg.cap)
                  continue;
                const Rational got = karoubi::schur_apply(l, x, cfg.cap).dimension();
                t["two-way-dimension/" + tag].record(got == schur_dimension_formula(l, Rational(p - q)),
                                                     ctx + " " + l.str(), "trace = " + got.str());
              }
          }
        }
      }
  t.emit(rep);
}

// ---------------------------------------------------------------- karoubi

inline void karoubi_suite(const SuiteConfig& cfg, Report& rep) {
  Tallies t;
  const int pmax = cfg.grid.get("p", 2), qmax = cfg.grid.get("q", 2), kmax = cfg.grid.get("k", 2);
  const auto seeds = cfg.seed_list(5);
  for (int k = 1; k <= kmax; ++k)
    for (auto sd : seeds) {
      for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q) {
          const KaroubiObject x = karoubi::perturbed_object(p, q, k, sd);
          const auto fx = karoubi::classify(x, cfg.cap);
          const KaroubiObject xd = karoubi::dual_k(x);
          const auto fd = karoubi::classify(xd, cfg.cap);
          const std::string ctx = pq(p, q) + " k=" + std::to_string(k) + " " + seed_ctx(sd);
          t["dual-report"].record(fd.kind == fx.kind && fd.kim_plus == fx.kim_plus && fd.kim_minus == fx.kim_minus &&
                                      fd.dim == fx.dim,
                                  ctx);
          const KaroubiObject tw = karoubi::tate_twist(x, 1);
          t["tate-twist-dimension"].record(tw.dimension() == x.dimension() && tw.twist() == x.twist() + 1, ctx);
          const KaroubiObject y = karoubi::perturbed_object(q % 2, p % 2, k, sd + 7);
          const auto fy = karoubi::classify(y, cfg.cap);
          const auto fs = karoubi::classify(karoubi::direct_sum(x, y), cfg.cap);
          t["direct-sum-dimension"].record(fs.dim == fx.dim + fy.dim && fs.kind != karoubi::FiniteDimKind::not_determined,
                                           ctx);
          if (x.pruned().ambient().dimension() * y.pruned().ambient().dimension() <= 9) {
            const KaroubiObject xy = karoubi::tensor_k(x.pruned(), y.pruned());
            const auto ft = karoubi::classify(xy, cfg.cap);
            t["tensor-finite"].record(ft.kind != karoubi::FiniteDimKind::not_determined && ft.dim == fx.dim * fy.dim,
                                      ctx);
          }
          t["idempotent-trace-integer"].record(supercat::trace(x.idempotent()).is_constant(), ctx);
        }
      // s∧ against the materialized direct sum on (1|1).
      const KaroubiObject x = karoubi::perturbed_object(1, 1, k, sd);
      const auto split = karoubi::split_parity(x);
      for (int n = 0; n <= 3; ++n) {
        const auto lazy = karoubi::s_wedge(n, x, split, cfg.cap, false);
        const auto full = karoubi::s_wedge(n, x, split, cfg.cap, true);
        t["s-wedge-materialized/(1|1)"].record(
            full.object && full.object->is_zero() == lazy.is_zero() && full.object->dimension() == lazy.dimension(),
            "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + seed_ctx(sd));
      }
    }
  t.emit(rep);
}

// ---------------------------------------------------------------- lifting

inline unsigned ceil_log2(int k) {
  unsigned r = 0;
  while ((1 << r) < k) ++r;
  return r;
}

inline void lifting_suite(const SuiteConfig& cfg, Report& rep) {
  Tallies t;
  const int kmax = cfg.grid.get("k", 6);
  const auto seeds = cfg.seed_list(100);
  const SuperSpace base = SuperSpace::make(2, 2, 1);
  for (int k = 1; k <= kmax; ++k) {
    const std::string kt = "/k=" + std::to_string(k);
    const SuperSpace x = base.with_order(k);
    for (auto sd : seeds) {
      const std::string ctx = seed_ctx(sd);
      Rng rng(sd);
      const ProjectorFamily res = rational_family(base, 3, rng);
      const SuperMorphism r0 = res.members[0];
      const SuperMorphism start = SuperMorphism(x, x, r0.matrix().with_order(k), supercat::trusted) +
                                  random::hom_trivial(x, rng);
      const auto lifted = lifting::lift_idempotent_counted(start);
      t["newton" + kt].record(lifted.idempotent.is_idempotent() && supercat::realization(lifted.idempotent) == r0 &&
                                  static_cast<unsigned>(lifted.iterations) <= ceil_log2(k),
                              ctx, "iterations = " + std::to_string(lifted.iterations));
      t["lifted-trace-integer" + kt].record(supercat::trace(lifted.idempotent).is_constant(), ctx);
      const ProjectorFamily fam = lifting::lift_family(res, k, sd);
      const auto chk = lifting::check_family(fam);
      bool residues_match = true;
      for (std::size_t i = 0; i < fam.size(); ++i)
        residues_match = residues_match && supercat::realization(fam.members[i]) == res.members[i];
      t["lift-family" + kt].record(chk.ok() && residues_match, ctx, chk.detail);
      const SuperMorphism u = random::unit(x, rng);
      const ProjectorFamily conj = lifting::conjugate(fam, u);
      t["conjugate-family" + kt].record(lifting::check_family(conj).ok(), ctx);
      const auto cu = lifting::conjugating_unit(fam, conj);
      bool intertwines = cu.unit * cu.inverse == SuperMorphism::identity(x) &&
                         cu.inverse * cu.unit == SuperMorphism::identity(x);
      for (std::size_t i = 0; i < fam.size(); ++i)
        intertwines = intertwines && cu.unit * fam.members[i] == conj.members[i] * cu.unit;
      t["conjugating-unit" + kt].record(intertwines, ctx);
      if (k >= 2) {
        const SuperMorphism f = random::hom_trivial(x, rng);
        const int idx = lifting::nilpotency_index(f);
        t["nilpotency" + kt].record(supercat::power(f, static_cast<unsigned>(k)).is_zero() && idx <= k, ctx,
                                    "index = " + std::to_string(idx));
      }
    }
  }
  t.emit(rep);
}

// ---------------------------------------------------------------- summand-uniqueness

inline void uniqueness_suite(const SuiteConfig& cfg, Report& rep) {
  Tallies t;
  const int kmax = cfg.grid.get("k", 4);
  const auto seeds = cfg.seed_list(25);
  const SuperSpace base = motives::build_realization(motives::MotiveSpec::surface(1, 3, 2));
  Json stats = Json::object();
  for (int k = 1; k <= kmax; ++k) {
    const std::string kt = "/k=" + std::to_string(k);
    int exact = 0, total = 0;
    for (auto sd : seeds) {
      const std::string ctx = seed_ctx(sd);
      Rng rng(sd);
      const ProjectorFamily res = rational_family(base, 4, rng);
      const ProjectorFamily a = lifting::lift_family(res, k, sd);
      const ProjectorFamily b = lifting::lift_family(res, k, sd * 2654435761ULL + 1);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const auto cr = lifting::corner_unit_check(a.members[i], b.members[i]);
        ++total;
        if (cr.exact_equality) ++exact;
        t["defect-hom-trivial" + kt].record(supercat::is_hom_trivial(cr.defect), ctx);
        t["summand-isomorphism" + kt].record(cr.isomorphism(), ctx + " member " + std::to_string(i));
        if (k <= 2) t["exact-equality" + kt].record(cr.exact_equality, ctx + " member " + std::to_string(i));
      }
      const auto cu = lifting::conjugating_unit(a, b);
      bool ok = cu.inverse * cu.unit == SuperMorphism::identity(a.ambient);
      for (std::size_t i = 0; i < a.size(); ++i) ok = ok && cu.unit * a.members[i] == b.members[i] * cu.unit;
      t["conjugating-unit" + kt].record(ok, ctx);
    }
    stats["k=" + std::to_string(k)] = {{"exact_equality", exact}, {"members", total}};
  }
  rep.results()["exact_equality_by_k"] = stats;
  t.emit(rep);
}

// ---------------------------------------------------------------- murre-rigidity

inline void murre_suite(const SuiteConfig& cfg, Report& rep) {
  Tallies t;
  const int kmax = cfg.grid.get("k", 3);
  const auto seeds = cfg.seed_list(100);
  int violations = 0;
  for (int k = 2; k <= kmax; ++k) {
    motives::MotiveSpec spec = motives::MotiveSpec::surface(1, 3, 2);
    spec.k = k;
    const ProjectorFamily blocks = motives::chow_kunneth(spec);
    const std::string kt = "/k=" + std::to_string(k);
    for (auto sd : seeds) {
      Rng rng(sd);
      const SuperMorphism raw = random::hom_trivial(blocks.ambient, rng);
      const auto cert_raw = lifting::murre_rigidity(blocks, raw);
      if (!cert_raw.within_hypotheses) ++violations;
      t["violations-reported" + kt].record(cert_raw.within_hypotheses || !cert_raw.violation.empty(), seed_ctx(sd));
      const SuperMorphism q = lifting::rigidify(blocks, raw);
      const auto cert = lifting::murre_rigidity(blocks, q);
      t["certified-zero" + kt].record(cert.within_hypotheses && cert.hom_trivial && cert.certified_zero, seed_ctx(sd),
                                      cert.violation);
      const SuperMorphism m = lifting::rigidify(blocks, random::morphism(blocks.ambient, blocks.ambient, rng));
      const auto cert_m = lifting::murre_rigidity(blocks, m);
      t["decomposition-exact" + kt].record(cert_m.within_hypotheses && cert_m.decomposition_exact, seed_ctx(sd));
    }
  }
  rep.results()["raw_samples_outside_hypotheses"] = violations;
  t.emit(rep);
}

// ---------------------------------------------------------------- motives

inline std::vector<motives::MotiveSpec> sample_specs() {
  using motives::MotiveSpec;
  return {MotiveSpec::point(),          MotiveSpec::lefschetz(1),        MotiveSpec::curve(0),
          MotiveSpec::curve(1),         MotiveSpec::curve(2),            MotiveSpec::surface(0, 9, 9),
          MotiveSpec::surface(1, 3, 2), MotiveSpec::surface(2, 10, 9),   MotiveSpec::abelian(1),
          MotiveSpec::abelian(2)};
}

inline void motives_suite(const SuiteConfig& cfg, Report& rep) {
  Tallies t;
  const int kmax = cfg.grid.get("k", 3);
  const auto seeds = cfg.seed_list(5);
  for (auto base : sample_specs()) {
    for (int k = 1; k <= kmax; ++k) {
      base.k = k;
      const std::string tag = base.str().substr(0, base.str().find(' ')) + "/k=" + std::to_string(k);
      base.seed = 0;
      const ProjectorFamily unperturbed = motives::chow_kunneth(base);
      for (auto sd : seeds) {
        motives::MotiveSpec spec = base;
        spec.seed = sd;
        const ProjectorFamily fam = motives::chow_kunneth(spec);
        const auto chk = lifting::check_family(fam);
        bool realizations = true;
        for (std::size_t i = 0; i < fam.size(); ++i)
          realizations = realizations &&
                         supercat::realization(fam.members[i]) == supercat::realization(unperturbed.members[i]);
        t["chow-kunneth/" + tag].record(chk.ok() && realizations, seed_ctx(sd), chk.detail);
        motives::MotiveSpec other = spec;
        other.seed = sd + 1000003;
        const ProjectorFamily fam2 = motives::chow_kunneth(other);
        bool iso = true;
        for (std::size_t i = 0; i < fam.size(); ++i)
          iso = iso && lifting::corner_unit_check(fam.members[i], fam2.members[i]).isomorphism();
        t["summand-uniqueness/" + tag].record(iso, seed_ctx(sd));
        if (spec.kind == motives::Kind::surface) {
          const auto rel = motives::surface_projector_relations(
              spec, motives::chow_kunneth(spec, motives::Perturbation::isometric));
          t["surface-relations-isometric/" + tag].record(rel.ok(), seed_ctx(sd));
          Rng rng(sd);
          const motives::ChowModel cm = motives::murre_filtration(spec, spec.transcendental_rank());
          const auto gr = motives::graded_action(spec, cm, random::hom_trivial(fam.ambient, rng));
          bool zero = true;
          for (const auto& m : gr) zero = zero && m.is_zero();
          t["graded-action-hom-trivial/" + tag].record(zero, seed_ctx(sd));
          if (fam.ambient.dimension() <= 8) {
            const auto m2 = motives::split_M2(spec, cfg.cap);
            t["m2-split/" + tag].record(m2.relations_exact && m2.n.dimension() == Rational(spec.transcendental_rank()) &&
                                            m2.n_report.kind == karoubi::FiniteDimKind::even &&
                                            m2.n_report.kim_plus == spec.transcendental_rank(),
                                        seed_ctx(sd));
          }
        }
      }
      if (base.kind == motives::Kind::surface) {
        const auto rel = motives::surface_projector_relations(base, unperturbed);
        t["surface-relations/" + tag].record(rel.ok(), "seed 0");
        for (int tp = 0; tp <= 3; ++tp) {
          const motives::ChowModel cm = motives::murre_filtration(base, tp);
          t["filtration/" + tag].record(cm.graded == std::vector<int>{1, base.q, tp} && cm.filtration.back() == 0,
                                        "t=" + std::to_string(tp));
        }
      }
      if (base.k == 1 && supercat::SuperSpace(motives::build_realization(base)).dimension() <= 4) {
        const auto fd = karoubi::classify(motives::motive(base), cfg.cap);
        t["finite-dimensional/" + tag].record(fd.kind != karoubi::FiniteDimKind::not_determined, base.str());
      }
    }
  }
  // Albanese wedge: d+1 cycles in a T-part of dimension d vanish, d cycles of a basis do not.
  for (int d = 0; d <= 3; ++d) {
    for (auto sd : seeds) {
      Rng rng(sd);
      std::vector<std::vector<Rational>> cycles(static_cast<std::size_t>(d + 1), std::vector<Rational>(static_cast<std::size_t>(d)));
      for (auto& c : cycles)
        for (auto& v : c) v = Rational(rng.uniform(-3, 3));
      t["albanese-wedge-vanishing/d=" + std::to_string(d)].record(motives::albanese_wedge(cycles, d).is_zero(),
                                                                   seed_ctx(sd));
    }
    std::vector<std::vector<Rational>> basis(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
    t["albanese-wedge-basis/d=" + std::to_string(d)].record(!motives::albanese_wedge(basis, d).is_zero(), "basis");
  }
  for (int tp = 0; tp <= 3; ++tp) {
    motives::MotiveSpec s = motives::MotiveSpec::surface(0, 9, 9);
    const auto v = motives::pg_zero_conclusion(s, tp);
    t["pg-zero-forces-t-zero"].record(v.applicable && v.consistent == (tp == 0), "t=" + std::to_string(tp), v.message);
  }
  for (int g = 1; g <= 3; ++g)
    for (int n = -2; n <= 3; ++n)
      t["abelian-multiplication/g=" + std::to_string(g)].record(motives::abelian_multiplication_action(g, n).ok(),
                                                                 "n=" + std::to_string(n));
  t.emit(rep);
}

// ---------------------------------------------------------------- summands

/// Seeded instance of Σ b_i a_i = id_X with m summands: b_i, a_i random for
/// i < m, and the last pair (id_X, id_X − Σ_{i<m} b_i a_i) through Y_m = X.
struct SummandInstance {
  std::vector<SuperMorphism> maps_in, maps_out;
};

inline SummandInstance summand_instance(const SuperSpace& x, int m, Rng& rng) {
  SummandInstance inst;
  SuperMorphism rest = SuperMorphism::identity(x);
  for (int i = 0; i + 1 < m; ++i) {
    const SuperSpace y = SuperSpace::make(rng.uniform(0, 2), rng.uniform(0, 2), x.order());
    inst.maps_in.push_back(random::morphism(x, y, rng));
    inst.maps_out.push_back(random::morphism(y, x, rng));
    rest = rest - inst.maps_out.back() * inst.maps_in.back();
  }
  inst.maps_in.push_back(SuperMorphism::identity(x));
  inst.maps_out.push_back(rest);
  return inst;
}

inline void summands_suite(const SuiteConfig& cfg, Report& rep) {
  Tallies t;
  const int kmax = cfg.grid.get("k", 2), mmax = cfg.grid.get("m", 3);
  const auto seeds = cfg.seed_list(100);
  for (int k = 1; k <= kmax; ++k)
    for (auto sd : seeds) {
      Rng rng(sd);
      const SuperSpace x = SuperSpace::make(rng.uniform(1, 2), rng.uniform(0, 2), k);
      const auto inst = summand_instance(x, mmax, rng);
      const auto out = karoubi::assemble_summand(inst.maps_in, inst.maps_out);
      t["gf-identity/k=" + std::to_string(k)].record(out.gf_is_identity, seed_ctx(sd));
      t["fg-idempotent/k=" + std::to_string(k)].record(out.idempotent.is_idempotent(), seed_ctx(sd));
    }
  t.emit(rep);
}

}  // namespace suites

struct Suite {
  std::string description;
  std::function<void(const SuiteConfig&, Report&)> run;
};

inline const std::map<std::string, Suite>& all_suites() {
  static const std::map<std::string, Suite> s = {
      {"symgroup", {"Young idempotents, character orthogonality, hook dimensions", suites::symgroup_suite}},
      {"supercat", {"supertrace of permutations, braiding, duality, realization", suites::supercat_suite}},
      {"karoubi", {"closure of finite dimensionality under sums, tensors, duals, twists", suites::karoubi_suite}},
      {"kimura-dim", {"Schur dimensions, vanishing bounds, parity splits, classification", suites::kimura_dim_suite}},
      {"lifting", {"Newton lifting, lifted families, conjugating units, nilpotency", suites::lifting_suite}},
      {"summand-uniqueness", {"corner units between two lifted families", suites::uniqueness_suite}},
      {"murre-rigidity", {"blockwise vanishing of homologically trivial maps", suites::murre_suite}},
      {"motives", {"Chow-Kunneth families, surface calculus, Albanese wedge, abelian relations", suites::motives_suite}},
      {"summands", {"direct summands from sum-of-composites decompositions", suites::summands_suite}},
  };
  return s;
}

inline std::string suite_names() {
  std::string out;
  for (const auto& [name, s] : all_suites()) out += (out.empty() ? "" : ", ") + name;
  return out;
}

}  // namespace kimura::cli
