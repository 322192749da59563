#pragma once

#include "kimura/errors.hpp"
#include "kimura/lifting.hpp"
#include "kimura/random.hpp"
#include "kimura/supercat.hpp"
#include "kimura/symgroup.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

// Idempotent completion of the model category. Objects are pairs
// (ambient, idempotent); images are never materialized as new bases.

namespace kimura::karoubi {

using supercat::Parity;
using supercat::SuperMorphism;
using supercat::SuperSpace;
using symgroup::Partition;

class KaroubiObject {
public:
  KaroubiObject() : idem_(SuperMorphism::identity(SuperSpace({}, 1))) {}

  /// Validates that idem is an exact idempotent endomorphism with an
  /// integer, ε-free trace.
  explicit KaroubiObject(SuperMorphism idem, int twist = 0) : idem_(std::move(idem)), twist_(twist) {
    if (!idem_.is_endomorphism()) throw std::invalid_argument("KaroubiObject: idempotent must be an endomorphism");
    if (!idem_.is_idempotent()) throw std::invalid_argument("KaroubiObject: morphism is not idempotent");
    (void)dimension();
  }
  KaroubiObject(SuperMorphism idem, int twist, supercat::trusted_t) : idem_(std::move(idem)), twist_(twist) {}

  static KaroubiObject whole(const SuperSpace& x, int twist = 0) {
    return KaroubiObject(SuperMorphism::identity(x), twist, supercat::trusted);
  }
  static KaroubiObject zero(int order) {
    return KaroubiObject(SuperMorphism::identity(SuperSpace({}, order)), 0, supercat::trusted);
  }

  const SuperSpace& ambient() const noexcept { return idem_.source(); }
  const SuperMorphism& idempotent() const noexcept { return idem_; }
  int twist() const noexcept { return twist_; }
  int order() const noexcept { return idem_.order(); }

  /// An idempotent whose entries all lie in the ε-ideal is zero, so the
  /// structural zero test is also the realization zero test.
  bool is_zero() const { return idem_.is_zero(); }

  /// Super-dimension trace(idem); throws if it carries an ε-part.
  Rational dimension() const {
    const TruncatedScalar t = supercat::trace(idem_);
    if (!t.is_constant()) throw std::logic_error("KaroubiObject: trace of the idempotent has an ε-part: " + t.str());
    return t[0];
  }

  /// Ranks of the realization on even and odd basis vectors. For an
  /// idempotent over Q the rank equals the trace.
  int even_rank() const { return rank_of(Parity::even); }
  int odd_rank() const { return rank_of(Parity::odd); }
  int classical_rank() const { return even_rank() + odd_rank(); }

  /// Isomorphic object on the support of the idempotent (basis vectors whose
  /// row and column are both zero are dropped).
  KaroubiObject pruned() const {
    const auto& m = idem_.matrix();
    std::vector<bool> used(m.rows(), false);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& e : m.row(i)) {
        used[i] = true;
        used[e.col] = true;
      }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < used.size(); ++i)
      if (used[i]) idx.push_back(i);
    if (idx.size() == used.size()) return *this;
    const SuperSpace sub = ambient().restricted(idx);
    return KaroubiObject(SuperMorphism(sub, sub, m.restrict(idx, idx), supercat::trusted), twist_, supercat::trusted);
  }

private:
  int rank_of(Parity p) const {
    Rational r;
    for (std::size_t i = 0; i < ambient().dimension(); ++i)
      if (ambient().parity(i) == p) r += idem_.matrix().get(i, i)[0];
    return static_cast<int>(r.to_int64());
  }

  SuperMorphism idem_;
  int twist_ = 0;
};

/// Σ_σ c(cycle type of σ)·Γ_σ on X^⊗n, for a class function c.
inline Matrix class_function_action(const std::map<symgroup::CycleType, Rational>& coeff, const SuperSpace& x, int n,
                                    std::size_t cap) {
  const SuperSpace xn = supercat::tensor_power(x, n, cap);
  const std::size_t dim = xn.dimension();
  const std::size_t base = x.dimension();
  const int k = x.order();
  std::vector<std::pair<symgroup::Permutation, Rational>> terms;
  for (const auto& s : symgroup::permutations(n)) {
    const Rational& c = coeff.at(s.cycle_type());
    if (!c.is_zero()) terms.emplace_back(s, c);
  }
  std::vector<Triplet> t;
  std::vector<std::size_t> digits(static_cast<std::size_t>(n));
  std::map<std::size_t, Rational> column;
  for (std::size_t col = 0; col < dim; ++col) {
    supercat::decode_index(col, base, digits);
    column.clear();
    for (const auto& [s, c] : terms) {
      auto [row, sign] = supercat::permute_basis_vector(s, x, digits);
      auto [it, inserted] = column.try_emplace(row, sign > 0 ? c : -c);
      if (!inserted) it->second += sign > 0 ? c : -c;
    }
    for (auto& [row, v] : column)
      if (!v.is_zero())
        t.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), TruncatedScalar(v, k)});
  }
  return Matrix::from_triplets(dim, dim, k, std::move(t));
}

/// n-th tensor power of a Karoubi object.
inline KaroubiObject tensor_power(const KaroubiObject& x, int n, std::size_t cap = supercat::kDefaultDimensionCap) {
  const SuperSpace xn = supercat::tensor_power(x.ambient(), n, cap);
  Matrix p = Matrix::identity(1, x.order());
  for (int i = 0; i < n; ++i) p = kronecker(p, x.idempotent().matrix());
  return KaroubiObject(SuperMorphism(xn, xn, std::move(p), supercat::trusted), n * x.twist(), supercat::trusted);
}

/// Schur functor S_λ(X) = (X^⊗n, D_λ), D_λ = Σ_σ (dim V_λ/n!) χ_λ(σ) idem^⊗n Γ_σ idem^⊗n.
///
/// Γ_σ commutes with idem^⊗n (naturality of the symmetry), so D_λ is
/// computed as (Σ_σ coeff·Γ_σ)·idem^⊗n. The object is first restricted to
/// the support of its idempotent.
inline KaroubiObject schur_apply(const Partition& lambda, const KaroubiObject& x,
                                 std::size_t cap = supercat::kDefaultDimensionCap) {
  const KaroubiObject base = x.pruned();
  const int n = lambda.size();
  const SuperSpace xn = supercat::tensor_power(base.ambient(), n, cap);
  std::map<symgroup::CycleType, Rational> coeff;
  for (const auto& ct : symgroup::partitions(n)) coeff.emplace(ct, symgroup::idempotent_coefficient(lambda, ct));
  Matrix d = class_function_action(coeff, base.ambient(), n, cap);
  if (!(base.idempotent() == SuperMorphism::identity(base.ambient())) && !d.is_zero())
    d = d * tensor_power(base, n, cap).idempotent().matrix();
  return KaroubiObject(SuperMorphism(xn, xn, std::move(d), supercat::trusted), n * x.twist(), supercat::trusted);
}

inline KaroubiObject wedge(int n, const KaroubiObject& x, std::size_t cap = supercat::kDefaultDimensionCap) {
  return schur_apply(Partition::column(n), x, cap);
}
inline KaroubiObject sym(int n, const KaroubiObject& x, std::size_t cap = supercat::kDefaultDimensionCap) {
  return schur_apply(Partition::row(n), x, cap);
}

inline void require_same_order(const KaroubiObject& x, const KaroubiObject& y, const char* what) {
  if (x.order() != y.order()) throw std::invalid_argument(std::string(what) + ": mismatched truncation orders");
}

/// Twist bookkeeping for binary operations: kept when both sides agree.
inline int combined_twist(const KaroubiObject& x, const KaroubiObject& y) { return x.twist() == y.twist() ? x.twist() : 0; }

inline KaroubiObject direct_sum(const KaroubiObject& x, const KaroubiObject& y) {
  require_same_order(x, y, "direct_sum");
  const SuperSpace s = supercat::direct_sum(x.ambient(), y.ambient());
  Matrix m = block_diagonal({x.idempotent().matrix(), y.idempotent().matrix()}, x.order());
  return KaroubiObject(SuperMorphism(s, s, std::move(m), supercat::trusted), combined_twist(x, y), supercat::trusted);
}

inline KaroubiObject tensor_k(const KaroubiObject& x, const KaroubiObject& y) {
  require_same_order(x, y, "tensor_k");
  return KaroubiObject(supercat::tensor_mor(x.idempotent(), y.idempotent()), x.twist() + y.twist(), supercat::trusted);
}

/// Dual object (X*, idem*).
inline KaroubiObject dual_k(const KaroubiObject& x) {
  return KaroubiObject(supercat::dual_mor(x.idempotent()), -x.twist(), supercat::trusted);
}

/// M(r) = M ⊗ L^{−r}: weights shift by −2r.
inline KaroubiObject tate_twist(const KaroubiObject& x, int r) {
  const SuperSpace s = x.ambient().shifted(-2 * r);
  return KaroubiObject(SuperMorphism(s, s, x.idempotent().matrix(), supercat::trusted), x.twist() + r,
                       supercat::trusted);
}

/// The Lefschetz object L = 1(−1): an even line of weight 2.
inline KaroubiObject lefschetz(int order) { return tate_twist(KaroubiObject::whole(SuperSpace::unit(order)), -1); }

struct ParitySplit {
  KaroubiObject plus;
  KaroubiObject minus;
};

namespace detail {
inline SuperMorphism parity_part(const KaroubiObject& x, Parity p) {
  const SuperMorphism& e = x.idempotent();
  const SuperMorphism candidate = e * supercat::parity_projector(x.ambient(), p) * e;
  if (candidate.is_idempotent()) return candidate;
  return lifting::lift_idempotent(candidate);
}
}  // namespace detail

/// X = X⁺ ⊕ X⁻ from the parity projectors. Morphisms of the model preserve
/// parity at every ε-order, so e∘p^±∘e is already idempotent; the lifting
/// step is only a fallback.
inline ParitySplit split_parity(const KaroubiObject& x) {
  return {KaroubiObject(detail::parity_part(x, Parity::even), x.twist(), supercat::trusted),
          KaroubiObject(detail::parity_part(x, Parity::odd), x.twist(), supercat::trusted)};
}

struct SplitIsomorphism {
  SuperMorphism to_sum;    ///< X → X⁺ ⊕ X⁻ on A ⊕ A
  SuperMorphism from_sum;  ///< X⁺ ⊕ X⁻ → X
  bool exact = false;      ///< from∘to = idem_X and to∘from = idem_{X⁺⊕X⁻}
};

/// Explicit isomorphism X ≅ X⁺ ⊕ X⁻ when both summands share X's ambient.
inline SplitIsomorphism parity_split_isomorphism(const KaroubiObject& x, const ParitySplit& split) {
  if (!(split.plus.ambient() == x.ambient()) || !(split.minus.ambient() == x.ambient()))
    throw std::invalid_argument("parity_split_isomorphism: summands must live on the ambient of X");
  const SuperSpace& a = x.ambient();
  const std::size_t d = a.dimension();
  const SuperSpace aa = supercat::direct_sum(a, a);
  const Matrix& ep = split.plus.idempotent().matrix();
  const Matrix& em = split.minus.idempotent().matrix();
  Matrix to = ep.embed(2 * d, d, 0, 0) + em.embed(2 * d, d, d, 0);
  Matrix from = ep.embed(d, 2 * d, 0, 0) + em.embed(d, 2 * d, 0, d);
  SplitIsomorphism iso{SuperMorphism(a, aa, std::move(to), supercat::trusted),
                       SuperMorphism(aa, a, std::move(from), supercat::trusted), false};
  const KaroubiObject sum = direct_sum(split.plus, split.minus);
  iso.exact = (iso.from_sum * iso.to_sum == x.idempotent()) && (iso.to_sum * iso.from_sum == sum.idempotent());
  return iso;
}

struct SWedgeSummand {
  int i = 0;  ///< exterior degree on X⁺
  int j = 0;  ///< symmetric degree on X⁻
  bool zero = true;
  Rational dimension;
};

struct SWedge {
  std::vector<SWedgeSummand> summands;
  /// Direct sum of the nonzero summands; only formed on request.
  std::optional<KaroubiObject> object;
  bool is_zero() const {
    for (const auto& s : summands)
      if (!s.zero) return false;
    return true;
  }
  Rational dimension() const {
    Rational d;
    for (const auto& s : summands) d += s.dimension;
    return d;
  }
};

/// s∧^n X = ⊕_{i+j=n} ∧^i X⁺ ⊗ S^j X⁻.
///
/// A summand ∧^i X⁺ ⊗ S^j X⁻ is zero exactly when one factor is (the
/// Kronecker product of two nonzero matrices is nonzero) and its dimension
/// is the product of the factor dimensions. Powers are computed in
/// increasing degree and stop at the first vanishing one, since ∧^{i+1} is a
/// summand of ∧^i ⊗ X. With `materialize` the tensor products are formed and
/// summed into `object`.
inline SWedge s_wedge(int n, const KaroubiObject& x, const ParitySplit& split,
                      std::size_t cap = supercat::kDefaultDimensionCap, bool materialize = true) {
  if (n < 0) throw std::invalid_argument("s_wedge: negative degree");
  require_same_order(x, split.plus, "s_wedge");
  auto powers = [n, cap](const KaroubiObject& y, auto power) {
    std::vector<KaroubiObject> out;
    for (int m = 0; m <= n; ++m) {
      out.push_back(power(m, y, cap));
      if (out.back().is_zero()) break;
    }
    return out;
  };
  const auto wedges = powers(split.plus, wedge);
  const auto syms = powers(split.minus, sym);
  SWedge out;
  for (int i = 0; i <= n; ++i) {
    const std::size_t a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(n - i);
    SWedgeSummand s{i, n - i, true, Rational()};
    if (a < wedges.size() && b < syms.size() && !wedges[a].is_zero() && !syms[b].is_zero()) {
      s.zero = false;
      s.dimension = wedges[a].dimension() * syms[b].dimension();
      if (materialize) {
        supercat::checked_power(wedges[a].ambient().dimension() * syms[b].ambient().dimension(), 1, cap);
        const KaroubiObject t = tensor_k(wedges[a], syms[b]);
        out.object = out.object ? direct_sum(*out.object, t) : t;
      }
    }
    out.summands.push_back(s);
  }
  if (materialize && !out.object) out.object = KaroubiObject::zero(x.order());
  return out;
}

/// A second parity split of the same object: both summands conjugated by the
/// seeded unit v = 1 + e(εN)e, which commutes with the idempotent e of X.
inline ParitySplit reseeded_split(const KaroubiObject& x, const ParitySplit& split, std::uint64_t seed) {
  Rng rng(seed);
  const SuperMorphism& e = x.idempotent();
  const SuperMorphism v = SuperMorphism::identity(x.ambient()) + e * random::hom_trivial(x.ambient(), rng) * e;
  const SuperMorphism w = supercat::inverse(v);
  return {KaroubiObject(w * split.plus.idempotent() * v, x.twist(), supercat::trusted),
          KaroubiObject(w * split.minus.idempotent() * v, x.twist(), supercat::trusted)};
}

/// (p|q) as the image of a seeded idempotent u⁻¹Pu, where u = 1 + εN and P
/// projects (p + [p>0] | q + [q>0]) onto p even and q odd lines. With seed 0
/// this is the whole space (p|q).
inline KaroubiObject perturbed_object(int p, int q, int k, std::uint64_t seed) {
  if (seed == 0) return KaroubiObject::whole(SuperSpace::make(p, q, k));
  const int pe = p + (p > 0 ? 1 : 0), qe = q + (q > 0 ? 1 : 0);
  const SuperSpace a = SuperSpace::make(pe, qe, k);
  Matrix proj(a.dimension(), a.dimension(), k);
  for (int i = 0; i < p; ++i)
    proj.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), TruncatedScalar(Rational(1), k));
  for (int i = 0; i < q; ++i)
    proj.set(static_cast<std::size_t>(pe + i), static_cast<std::size_t>(pe + i), TruncatedScalar(Rational(1), k));
  Rng rng(seed);
  const SuperMorphism u = random::unit(a, rng);
  return KaroubiObject(supercat::inverse(u) * SuperMorphism(a, a, std::move(proj), supercat::trusted) * u);
}

enum class FiniteDimKind { even, odd, mixed, not_determined };

inline const char* to_string(FiniteDimKind k) {
  switch (k) {
    case FiniteDimKind::even: return "even";
    case FiniteDimKind::odd: return "odd";
    case FiniteDimKind::mixed: return "mixed";
    case FiniteDimKind::not_determined: return "not-determined";
  }
  return "?";
}

struct FiniteDimReport {
  FiniteDimKind kind = FiniteDimKind::not_determined;
  int kim_plus = 0;   ///< largest n with ∧^n X⁺ ≠ 0
  int kim_minus = 0;  ///< largest n with S^n X⁻ ≠ 0
  int dim = 0;
  Rational trace_dimension;  ///< trace of the idempotent, for cross-checking dim
  bool evenly = false;       ///< some ∧^n X vanishes
  bool oddly = false;        ///< some S^n X vanishes
  bool is_zero = false;
};

namespace detail {
// Largest n with power(n) ≠ 0, searched up to rank + 1.
template <class Power>
std::optional<int> largest_nonvanishing(const KaroubiObject& x, Power power, std::size_t cap) {
  const int bound = x.classical_rank() + 1;
  for (int n = 0; n <= bound; ++n)
    if (power(n, x, cap).is_zero()) return n - 1;
  return std::nullopt;
}
}  // namespace detail

/// Kimura classification by exhaustive power search.
///
/// kim is the largest nonvanishing degree. Evenness/oddness of X itself is
/// decided on ∧^{r+1}X and S^{r+1}X (r the classical rank of X) when these
/// fit under the cap; otherwise on the parity summands.
inline FiniteDimReport classify(const KaroubiObject& x, std::size_t cap = supercat::kDefaultDimensionCap) {
  FiniteDimReport rep;
  const ParitySplit split = split_parity(x);
  const auto kp = detail::largest_nonvanishing(split.plus, wedge, cap);
  const auto km = detail::largest_nonvanishing(split.minus, sym, cap);
  rep.trace_dimension = x.dimension();
  rep.is_zero = x.is_zero();
  if (!kp || !km) return rep;
  rep.kim_plus = *kp;
  rep.kim_minus = *km;
  rep.dim = rep.kim_plus - rep.kim_minus;
  if (split.minus.is_zero()) rep.kind = FiniteDimKind::even;
  else if (split.plus.is_zero()) rep.kind = FiniteDimKind::odd;
  else rep.kind = FiniteDimKind::mixed;
  const int r = x.classical_rank();
  try {
    rep.evenly = wedge(r + 1, x, cap).is_zero();
    rep.oddly = sym(r + 1, x, cap).is_zero();
  } catch (const size_error&) {
    rep.evenly = split.minus.is_zero();
    rep.oddly = split.plus.is_zero();
  }
  return rep;
}

struct SummandAssembly {
  SuperMorphism f;           ///< X → ⊕Y_i, induced by the a_i
  SuperMorphism g;           ///< ⊕Y_i → X, induced by the b_i
  SuperMorphism idempotent;  ///< f∘g on ⊕Y_i
  bool gf_is_identity = false;
};

/// X as a direct summand of ⊕Y_i from maps with Σ b_i∘a_i = id_X.
inline SummandAssembly assemble_summand(const std::vector<SuperMorphism>& maps_in,
                                        const std::vector<SuperMorphism>& maps_out) {
  if (maps_in.empty() || maps_in.size() != maps_out.size())
    throw std::invalid_argument("assemble_summand: need equally many (nonzero count) maps in and out");
  const SuperSpace& x = maps_in.front().source();
  SuperMorphism sum = SuperMorphism::zero(x, x);
  for (std::size_t i = 0; i < maps_in.size(); ++i) {
    if (!(maps_in[i].source() == x) || !(maps_out[i].target() == x) || !(maps_in[i].target() == maps_out[i].source()))
      throw std::invalid_argument("assemble_summand: map " + std::to_string(i) + " has incompatible source/target");
    sum = sum + maps_out[i] * maps_in[i];
  }
  const SuperMorphism defect = sum - SuperMorphism::identity(x);
  if (!defect.is_zero())
    throw std::invalid_argument("assemble_summand: Σ b_i a_i ≠ id; defect = " + defect.matrix().str());
  SuperSpace total({}, x.order());
  for (const auto& a : maps_in) total = supercat::direct_sum(total, a.target());
  const std::size_t dx = x.dimension(), dt = total.dimension();
  Matrix f(dt, dx, x.order()), g(dx, dt, x.order());
  std::size_t off = 0;
  for (std::size_t i = 0; i < maps_in.size(); ++i) {
    f += maps_in[i].matrix().embed(dt, dx, off, 0);
    g += maps_out[i].matrix().embed(dx, dt, 0, off);
    off += maps_in[i].target().dimension();
  }
  SummandAssembly out{SuperMorphism(x, total, std::move(f), supercat::trusted),
                      SuperMorphism(total, x, std::move(g), supercat::trusted), SuperMorphism(), false};
  out.idempotent = out.f * out.g;
  out.gf_is_identity = out.g * out.f == SuperMorphism::identity(x);
  return out;
}

}  // namespace kimura::karoubi
