#pragma once

#include "kimura/errors.hpp"
#include "kimura/karoubi.hpp"
#include "kimura/lifting.hpp"
#include "kimura/random.hpp"
#include "kimura/supercat.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

// Motive models built from Betti data: realizations, Chow–Künneth families,
// the surface projector relations, the model Chow group of a surface with its
// filtration, the splitting M₂ = ρL ⊕ N, the Albanese wedge and the abelian
// multiplication relations.

namespace kimura::motives {

using karoubi::KaroubiObject;
using lifting::ProjectorFamily;
using supercat::BasisVector;
using supercat::Parity;
using supercat::SuperMorphism;
using supercat::SuperSpace;

enum class Kind { point, lefschetz, curve, surface, abelian };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::point: return "point";
    case Kind::lefschetz: return "lefschetz";
    case Kind::curve: return "curve";
    case Kind::surface: return "surface";
    case Kind::abelian: return "abelian";
  }
  return "?";
}

struct MotiveSpec {
  Kind kind = Kind::point;
  int r = 0;    ///< Lefschetz power
  int g = 0;    ///< genus of a curve, dimension of an abelian variety
  int q = 0;    ///< irregularity of a surface
  int b2 = 1;   ///< second Betti number of a surface
  int rho = 1;  ///< Picard number of a surface
  std::optional<int> pg;
  int k = 1;
  std::uint64_t seed = 0;
  int t = 0;  ///< dimension of the model Albanese kernel
  bool finite = true;

  static MotiveSpec point() { return {}; }
  static MotiveSpec lefschetz(int r) {
    MotiveSpec s;
    s.kind = Kind::lefschetz;
    s.r = r;
    return s;
  }
  static MotiveSpec curve(int g) {
    MotiveSpec s;
    s.kind = Kind::curve;
    s.g = g;
    return s;
  }
  static MotiveSpec surface(int q, int b2, int rho) {
    MotiveSpec s;
    s.kind = Kind::surface;
    s.q = q;
    s.b2 = b2;
    s.rho = rho;
    return s;
  }
  static MotiveSpec abelian(int g) {
    MotiveSpec s;
    s.kind = Kind::abelian;
    s.g = g;
    return s;
  }

  /// Dimension d of the variety; weights run over 0..2d.
  int dimension() const {
    switch (kind) {
      case Kind::point: return 0;
      case Kind::lefschetz: return r;
      case Kind::curve: return 1;
      case Kind::surface: return 2;
      case Kind::abelian: return g;
    }
    return 0;
  }

  /// p_g = 0 is identified with b₂ = ρ.
  bool pg_zero() const { return b2 == rho; }
  int transcendental_rank() const { return b2 - rho; }

  void validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument("MotiveSpec: " + m); };
    if (k < 1 || k > kMaxOrder) fail("k must lie in [1, " + std::to_string(kMaxOrder) + "]");
    if (t < 0) fail("t must be nonnegative");
    switch (kind) {
      case Kind::point: break;
      case Kind::lefschetz:
        if (r < 0) fail("Lefschetz power must be nonnegative");
        break;
      case Kind::curve:
        if (g < 0) fail("genus must be nonnegative");
        break;
      case Kind::abelian:
        if (g < 1 || g > 3) fail("abelian dimension must lie in [1, 3]");
        break;
      case Kind::surface:
        if (q < 0) fail("q must be nonnegative");
        if (b2 < 1) fail("b2 must be positive");
        if (rho < 1 || rho > b2) fail("rho must satisfy 1 <= rho <= b2");
        if (pg && *pg < 0) fail("pg must be nonnegative");
        if (pg && ((*pg == 0) != pg_zero())) fail("pg = 0 must coincide with b2 = rho");
        break;
    }
  }

  std::string str() const {
    std::ostringstream os;
    os << to_string(kind);
    switch (kind) {
      case Kind::point: break;
      case Kind::lefschetz: os << "(r=" << r << ")"; break;
      case Kind::curve:
      case Kind::abelian: os << "(g=" << g << ")"; break;
      case Kind::surface: os << "(q=" << q << ",b2=" << b2 << ",rho=" << rho << ")"; break;
    }
    os << " k=" << k << " seed=" << seed;
    return os.str();
  }
};

namespace detail {
inline void push_weight(std::vector<BasisVector>& basis, int weight, int count) {
  const Parity p = weight % 2 == 0 ? Parity::even : Parity::odd;
  for (int i = 0; i < count; ++i) basis.push_back({p, weight});
}
}  // namespace detail

/// Cohomology of the model, ordered by weight; parity = weight mod 2.
///
/// Abelian varieties use the exterior algebra on 2g odd weight-1 generators,
/// with basis the subsets of generators ordered by size and then
/// lexicographically.
inline SuperSpace build_realization(const MotiveSpec& spec) {
  spec.validate();
  std::vector<BasisVector> basis;
  switch (spec.kind) {
    case Kind::point: detail::push_weight(basis, 0, 1); break;
    case Kind::lefschetz: detail::push_weight(basis, 2 * spec.r, 1); break;
    case Kind::curve:
      detail::push_weight(basis, 0, 1);
      detail::push_weight(basis, 1, 2 * spec.g);
      detail::push_weight(basis, 2, 1);
      break;
    case Kind::surface:
      detail::push_weight(basis, 0, 1);
      detail::push_weight(basis, 1, 2 * spec.q);
      detail::push_weight(basis, 2, spec.b2);
      detail::push_weight(basis, 3, 2 * spec.q);
      detail::push_weight(basis, 4, 1);
      break;
    case Kind::abelian: {
      const int gens = 2 * spec.g;
      for (int w = 0; w <= gens; ++w)
        for (unsigned mask = 0; mask < (1u << gens); ++mask)
          if (std::popcount(mask) == w) detail::push_weight(basis, w, 1);
      break;
    }
  }
  return SuperSpace(std::move(basis), spec.k);
}

/// Subsets of the 2g generators in the basis order of build_realization.
inline std::vector<unsigned> abelian_basis_masks(int g) {
  std::vector<unsigned> masks;
  const int gens = 2 * g;
  for (int w = 0; w <= gens; ++w)
    for (unsigned mask = 0; mask < (1u << gens); ++mask)
      if (std::popcount(mask) == w) masks.push_back(mask);
  return masks;
}

/// Involution J pairing the j-th basis vector of weight i with the j-th basis
/// vector of weight 2d − i.
inline Matrix duality_pairing(const SuperSpace& x, int d) {
  std::map<int, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < x.dimension(); ++i) by_weight[x.weight(i)].push_back(i);
  std::vector<Triplet> t;
  for (const auto& [w, idx] : by_weight) {
    const auto it = by_weight.find(2 * d - w);
    if (it == by_weight.end() || it->second.size() != idx.size())
      throw std::invalid_argument("duality_pairing: weights " + std::to_string(w) + " and " +
                                  std::to_string(2 * d - w) + " have different dimensions");
    for (std::size_t j = 0; j < idx.size(); ++j)
      t.push_back({static_cast<std::uint32_t>(idx[j]), static_cast<std::uint32_t>(it->second[j]),
                   TruncatedScalar(Rational(1), x.order())});
  }
  return Matrix::from_triplets(x.dimension(), x.dimension(), x.order(), std::move(t));
}

/// Adjoint of an endomorphism under the weight pairing: J fᵀ J.
inline SuperMorphism transpose(const SuperMorphism& f, int d) {
  if (!f.is_endomorphism()) throw std::invalid_argument("transpose: not an endomorphism");
  const Matrix j = duality_pairing(f.source(), d);
  return SuperMorphism(f.source(), f.source(), j * f.matrix().transpose() * j, supercat::trusted);
}

/// exp(A − Aᵗ) for a seeded homologically trivial A: a unit u with uᵗ = u⁻¹.
inline SuperMorphism isometric_unit(const SuperSpace& x, int d, Rng& rng) {
  const SuperMorphism a = random::hom_trivial(x, rng);
  const SuperMorphism n = a - transpose(a, d);
  SuperMorphism term = SuperMorphism::identity(x), u = term;
  Rational fact(1);
  for (int j = 1; j < x.order(); ++j) {
    term = term * n;
    fact *= Rational(j);
    u = u + fact.reciprocal() * term;
  }
  return u;
}

enum class Perturbation { general, isometric };

struct ChowKunneth {
  ProjectorFamily family;
  SuperMorphism unit;  ///< family members are unit⁻¹ ∘ π_i^weight ∘ unit
};

/// Weight projectors π_0..π_{2d}, conjugated by a seeded unit when spec.seed
/// is nonzero: 1 + εN in general, exp(ε(A − Aᵗ)) for the isometric variant.
inline ChowKunneth chow_kunneth_with_unit(const MotiveSpec& spec, Perturbation kind = Perturbation::general) {
  const SuperSpace x = build_realization(spec);
  const int d = spec.dimension();
  ProjectorFamily fam{x, {}, {}};
  const int lo = spec.kind == Kind::lefschetz ? 2 * spec.r : 0;
  const int hi = spec.kind == Kind::lefschetz ? 2 * spec.r : 2 * d;
  for (int w = lo; w <= hi; ++w) {
    fam.members.push_back(supercat::weight_projector(x, w));
    fam.labels.push_back(w);
  }
  if (spec.seed == 0) return {fam, SuperMorphism::identity(x)};
  Rng rng(spec.seed);
  const SuperMorphism u = kind == Perturbation::general ? random::unit(x, rng) : isometric_unit(x, d, rng);
  return {lifting::conjugate(fam, u), u};
}

inline ProjectorFamily chow_kunneth(const MotiveSpec& spec, Perturbation kind = Perturbation::general) {
  return chow_kunneth_with_unit(spec, kind).family;
}

/// Member of a family by label (cohomological degree).
inline const SuperMorphism& member(const ProjectorFamily& fam, int label) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (fam.label(i) == label) return fam.members[i];
  throw std::out_of_range("ProjectorFamily has no member " + std::to_string(label));
}

struct RelationCheck {
  std::string name;
  bool ok = false;
  std::string defect;  ///< defect matrix when the relation fails
};

struct SurfaceRelations {
  SuperMorphism pi3;  ///< π₁ᵗ − π₁∘π₁ᵗ
  SuperMorphism pi2;  ///< id − π₀ − π₁ − π₃ − π₄
  std::vector<RelationCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// Rebuilds π₃ from π₁ and π₂ by subtraction, and checks both are valid
/// projectors orthogonal to the rest of the family.
inline SurfaceRelations surface_projector_relations(const MotiveSpec& spec, const ProjectorFamily& fam) {
  if (spec.kind != Kind::surface) throw std::invalid_argument("surface_projector_relations: not a surface spec");
  const SuperMorphism& p0 = member(fam, 0);
  const SuperMorphism& p1 = member(fam, 1);
  const SuperMorphism& p4 = member(fam, 4);
  const SuperMorphism p1t = transpose(p1, 2);
  SurfaceRelations rel;
  rel.pi3 = p1t - p1 * p1t;
  const SuperMorphism id = SuperMorphism::identity(fam.ambient);
  rel.pi2 = id - p0 - p1 - rel.pi3 - p4;
  auto check = [&rel](std::string name, const SuperMorphism& lhs, const SuperMorphism& rhs) {
    const SuperMorphism d = lhs - rhs;
    rel.checks.push_back({std::move(name), d.is_zero(), d.is_zero() ? std::string() : d.matrix().str()});
  };
  check("pi3 idempotent", rel.pi3 * rel.pi3, rel.pi3);
  check("pi2 idempotent", rel.pi2 * rel.pi2, rel.pi2);
  const SuperMorphism zero = SuperMorphism::zero(fam.ambient, fam.ambient);
  const std::pair<const char*, const SuperMorphism*> others[] = {{"pi0", &p0}, {"pi1", &p1}, {"pi4", &p4}};
  for (const auto& [name, p] : others) {
    check(std::string("pi3 * ") + name + " = 0", rel.pi3 * *p, zero);
    check(std::string(name) + " * pi3 = 0", *p * rel.pi3, zero);
  }
  check("pi3 matches family", rel.pi3, member(fam, 3));
  check("pi2 matches family", rel.pi2, member(fam, 2));
  if (spec.q == 0) {
    check("pi1 = 0 (q = 0)", p1, zero);
    check("pi3 = 0 (q = 0)", rel.pi3, zero);
  }
  return rel;
}

/// Model A²(X) = Q ⊕ Alb(X)_Q ⊕ T(X) with the projector actions π₄, π₃, π₂
/// on the three pieces and the filtration they cut out.
struct ChowModel {
  int degree_dim = 1;
  int albanese_dim = 0;
  int kernel_dim = 0;
  int d_param = 0;  ///< b₂ − ρ
  Matrix pi4_action, pi3_action, pi2_action;
  std::vector<int> filtration;  ///< dim F⁰, F¹, F², F³
  std::vector<int> graded;      ///< dim Gr⁰, Gr¹, Gr²
  int total() const { return degree_dim + albanese_dim + kernel_dim; }
};

inline ChowModel murre_filtration(const MotiveSpec& spec, int t_param) {
  spec.validate();
  if (spec.kind != Kind::surface) throw std::invalid_argument("murre_filtration: not a surface spec");
  if (t_param < 0) throw std::invalid_argument("murre_filtration: t must be nonnegative");
  ChowModel m;
  m.albanese_dim = spec.q;
  m.kernel_dim = t_param;
  m.d_param = spec.transcendental_rank();
  const std::size_t n = static_cast<std::size_t>(m.total());
  auto block = [n](std::size_t off, std::size_t len) {
    Matrix a(n, n, 1);
    for (std::size_t i = off; i < off + len; ++i) a.set(i, i, TruncatedScalar(Rational(1), 1));
    return a;
  };
  m.pi4_action = block(0, 1);
  m.pi3_action = block(1, static_cast<std::size_t>(m.albanese_dim));
  m.pi2_action = block(1 + static_cast<std::size_t>(m.albanese_dim), static_cast<std::size_t>(m.kernel_dim));
  // F^ν = ker π₄ ∩ … ∩ ker π_{5−ν}, computed as the kernel of the stacked actions.
  const Matrix* actions[] = {&m.pi4_action, &m.pi3_action, &m.pi2_action};
  m.filtration.push_back(static_cast<int>(n));
  std::vector<std::vector<Rational>> stacked;
  for (const Matrix* a : actions) {
    const auto rows = linalg::to_dense(*a);
    stacked.insert(stacked.end(), rows.begin(), rows.end());
    const Matrix s = Matrix::from_rows(stacked, n, 1);
    m.filtration.push_back(static_cast<int>(n - linalg::rank(s)));
  }
  for (std::size_t v = 0; v + 1 < m.filtration.size(); ++v) m.graded.push_back(m.filtration[v] - m.filtration[v + 1]);
  return m;
}

/// Action of a correspondence γ on the three graded pieces, read off the
/// realization of γ: Gr⁰ through H⁴, Gr¹ through the first q coordinates of
/// H³, Gr² through the transcendental coordinates of H² (zero-padded when
/// t exceeds b₂ − ρ).
inline std::vector<Matrix> graded_action(const MotiveSpec& spec, const ChowModel& model, const SuperMorphism& gamma) {
  const SuperSpace x = build_realization(spec);
  if (!(gamma.source().with_order(spec.k) == x) || !gamma.is_endomorphism())
    throw std::invalid_argument("graded_action: γ is not an endomorphism of the surface realization");
  const Matrix h = gamma.matrix().coefficient(0);
  auto indices = [&x](int w) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < x.dimension(); ++i)
      if (x.weight(i) == w) idx.push_back(i);
    return idx;
  };
  auto piece = [&h](const std::vector<std::size_t>& idx, std::size_t dim) {
    std::vector<std::size_t> used(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(std::min(dim, idx.size())));
    return h.restrict(used, used).embed(dim, dim, 0, 0);
  };
  const auto w2 = indices(2);
  const std::vector<std::size_t> trans(w2.begin() + spec.rho, w2.end());
  return {piece(indices(4), static_cast<std::size_t>(model.degree_dim)),
          piece(indices(3), static_cast<std::size_t>(model.albanese_dim)),
          piece(trans, static_cast<std::size_t>(model.kernel_dim))};
}

struct M2Split {
  KaroubiObject m2;       ///< (X, π₂)
  KaroubiObject lefschetz;
  std::vector<SuperMorphism> f;  ///< L → X, one per Néron–Severi class
  std::vector<SuperMorphism> g;  ///< X → L
  KaroubiObject n;        ///< (X, π₂ − Σ f_i g_i)
  karoubi::FiniteDimReport n_report;
  bool relations_exact = false;  ///< g_i f_j = δ_ij, f_i g_i ≤ π₂, e_N idempotent and orthogonal to the f_i g_i
};

/// M₂(X) = ρL ⊕ N through the first ρ coordinates of H² (the Néron–Severi
/// classes), transported by the Chow–Künneth unit.
inline M2Split split_M2(const MotiveSpec& spec, std::size_t cap = supercat::kDefaultDimensionCap) {
  if (spec.kind != Kind::surface) throw std::invalid_argument("split_M2: not a surface spec");
  const ChowKunneth ck = chow_kunneth_with_unit(spec);
  const SuperSpace& x = ck.family.ambient;
  const SuperMorphism& pi2 = member(ck.family, 2);
  const SuperMorphism u_inv = supercat::inverse(ck.unit);
  const KaroubiObject l = karoubi::lefschetz(spec.k);
  const SuperSpace& ls = l.ambient();
  M2Split out{KaroubiObject(pi2), l, {}, {}, KaroubiObject::zero(spec.k), {}, false};
  std::size_t first = 0;
  while (x.weight(first) != 2) ++first;
  SuperMorphism ns = SuperMorphism::zero(x, x);
  for (int i = 0; i < spec.rho; ++i) {
    Matrix inc(x.dimension(), 1, spec.k), proj(1, x.dimension(), spec.k);
    inc.set(first + static_cast<std::size_t>(i), 0, TruncatedScalar(Rational(1), spec.k));
    proj.set(0, first + static_cast<std::size_t>(i), TruncatedScalar(Rational(1), spec.k));
    out.f.push_back(u_inv * SuperMorphism(ls, x, std::move(inc)));
    out.g.push_back(SuperMorphism(x, ls, std::move(proj)) * ck.unit);
    ns = ns + out.f.back() * out.g.back();
  }
  out.n = KaroubiObject(pi2 - ns);
  bool exact = true;
  for (std::size_t i = 0; i < out.f.size(); ++i)
    for (std::size_t j = 0; j < out.f.size(); ++j) {
      const SuperMorphism gf = out.g[i] * out.f[j];
      exact = exact && (i == j ? gf == SuperMorphism::identity(ls) : gf.is_zero());
    }
  exact = exact && pi2 * ns == ns && ns * pi2 == ns && (out.n.idempotent() * ns).is_zero() &&
          (ns * out.n.idempotent()).is_zero();
  out.relations_exact = exact;
  out.n_report = karoubi::classify(out.n, cap);
  return out;
}

/// Antisymmetrized product c₁∧…∧c_n = (1/n!) Σ_σ sgn(σ) c_{σ(1)}⊗…⊗c_{σ(n)}
/// in T^⊗n, stored by index tuple (only nonzero coefficients).
struct AlbaneseWedge {
  int n = 0;
  int t = 0;
  std::map<std::vector<int>, Rational> coefficients;
  bool is_zero() const { return coefficients.empty(); }
};

/// Coefficient of e_{i₁}⊗…⊗e_{i_n} is det[c_a(i_b)]/n!; computed on
/// increasing tuples and spread over their permutations with signs.
inline AlbaneseWedge albanese_wedge(const std::vector<std::vector<Rational>>& cycles, int t) {
  AlbaneseWedge w;
  w.n = static_cast<int>(cycles.size());
  w.t = t;
  for (const auto& c : cycles)
    if (static_cast<int>(c.size()) != t) throw std::invalid_argument("albanese_wedge: cycle outside the T-part");
  const int n = w.n;
  if (n > t) return w;
  if (n == 0) {
    w.coefficients.emplace(std::vector<int>{}, Rational(1));
    return w;
  }
  const Rational inv_fact = Rational(symgroup::factorial(n)).reciprocal();
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    linalg::DenseQ m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            cycles[static_cast<std::size_t>(a)][static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
    const Rational det = linalg::determinant(m) * inv_fact;
    if (!det.is_zero()) {
      for (const auto& s : symgroup::permutations(n)) {
        std::vector<int> tuple(static_cast<std::size_t>(n));
        for (int b = 0; b < n; ++b) tuple[static_cast<std::size_t>(b)] = idx[static_cast<std::size_t>(s(b))];
        w.coefficients.emplace(std::move(tuple), s.sign() > 0 ? det : -det);
      }
    }
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == t - n + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int b = pos + 1; b < n; ++b) idx[static_cast<std::size_t>(b)] = idx[static_cast<std::size_t>(b - 1)] + 1;
  }
  return w;
}

/// As above for cycles in the T-part of a surface model. A finite
/// dimensional model constrains t ≤ b₂ − ρ.
inline AlbaneseWedge albanese_wedge(const std::vector<std::vector<Rational>>& cycles, const MotiveSpec& spec) {
  if (spec.kind != Kind::surface) throw std::invalid_argument("albanese_wedge: not a surface spec");
  if (spec.finite && spec.t > spec.transcendental_rank())
    throw hypothesis_error("albanese_wedge: a finite dimensional model needs t <= b2 - rho");
  return albanese_wedge(cycles, spec.t);
}

struct PgZeroVerdict {
  bool applicable = false;
  bool consistent = false;
  std::string message;
  std::optional<std::string> shape;  ///< decomposition of the motive when q = 0
};

/// With p_g = 0 a finite dimensional model has d = 0, so every single cycle
/// of T wedges to zero and T itself vanishes.
inline PgZeroVerdict pg_zero_conclusion(const MotiveSpec& spec, int t_param) {
  spec.validate();
  PgZeroVerdict v;
  if (spec.kind != Kind::surface || !spec.pg_zero()) {
    v.message = "outside hypotheses: requires a surface with p_g = 0 (b2 = rho)";
    return v;
  }
  v.applicable = true;
  if (!spec.finite) {
    v.consistent = true;
    v.message = "model not flagged finite dimensional: no constraint on t";
  } else if (t_param == 0) {
    v.consistent = true;
    v.message = "T(X) = 0 as forced by finite dimensionality";
  } else {
    std::vector<Rational> c(static_cast<std::size_t>(t_param));
    c[0] = Rational(1);
    const bool wedge_nonzero = !albanese_wedge({c}, t_param).is_zero();
    v.consistent = false;
    v.message = "inconsistent: finite dimensionality with b2 = rho gives d = 0, but t = " + std::to_string(t_param) +
                (wedge_nonzero ? " admits a nonvanishing single cycle" : "");
  }
  if (spec.q == 0 && v.consistent) v.shape = "1 ⊕ " + std::to_string(spec.b2) + "L ⊕ L²";
  return v;
}

struct AbelianCheck {
  int weight = 0;
  Rational eigenvalue;  ///< n^weight
  bool left = false;    ///< n*∘π_i = n^i π_i
  bool right = false;   ///< π_i∘n* = n^i π_i
};

struct AbelianReport {
  int g = 0;
  int n = 0;
  SuperMorphism n_star;
  std::vector<AbelianCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.left || !c.right) return false;
    return true;
  }
};

/// n* = multiplication by n^i on the weight-i part of the exterior algebra.
inline AbelianReport abelian_multiplication_action(int g, int n, int k = 1) {
  if (g < 1 || g > 3) throw std::invalid_argument("abelian_multiplication_action: g must lie in [1, 3]");
  if (n < -5 || n > 5) throw std::invalid_argument("abelian_multiplication_action: |n| must be at most 5");
  MotiveSpec spec = MotiveSpec::abelian(g);
  spec.k = k;
  const SuperSpace x = build_realization(spec);
  AbelianReport rep{g, n, SuperMorphism(), {}};
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    Rational v(1);
    for (int e = 0; e < x.weight(i); ++e) v *= Rational(n);
    if (!v.is_zero()) t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), TruncatedScalar(v, k)});
  }
  rep.n_star = SuperMorphism(x, x, Matrix::from_triplets(x.dimension(), x.dimension(), k, std::move(t)));
  const ProjectorFamily fam = chow_kunneth(spec);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Rational ev(1);
    for (int e = 0; e < fam.label(i); ++e) ev *= Rational(n);
    const SuperMorphism target = ev * fam.members[i];
    rep.checks.push_back({fam.label(i), ev, rep.n_star * fam.members[i] == target, fam.members[i] * rep.n_star == target});
  }
  return rep;
}

/// The whole motive h(X) as a Karoubi object.
inline KaroubiObject motive(const MotiveSpec& spec) { return KaroubiObject::whole(build_realization(spec)); }

}  // namespace kimura::motives
