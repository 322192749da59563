#pragma once

#include "kimura/errors.hpp"
#include "kimura/random.hpp"
#include "kimura/supercat.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

// Calculus of the nilpotent ideal ε·Q[ε]/(ε^k): lifting idempotents and
// complete orthogonal families, conjugating units, the corner units
// e = π∘π̃∘π, nilpotency of homologically trivial maps, and the blockwise
// rigidity certificate.

namespace kimura::lifting {

using supercat::SuperMorphism;
using supercat::SuperSpace;

/// Complete family of pairwise orthogonal idempotents on one ambient space.
struct ProjectorFamily {
  SuperSpace ambient;
  std::vector<SuperMorphism> members;
  /// Optional index of each member (e.g. the cohomological degree i of π_i).
  std::vector<int> labels;

  int order() const { return ambient.order(); }
  std::size_t size() const { return members.size(); }
  int label(std::size_t i) const { return i < labels.size() ? labels[i] : static_cast<int>(i); }
};

struct FamilyCheck {
  bool idempotent = true;
  bool orthogonal = true;
  bool complete = true;
  std::string detail;
  bool ok() const { return idempotent && orthogonal && complete; }
};

inline FamilyCheck check_family(const ProjectorFamily& fam) {
  FamilyCheck c;
  std::ostringstream why;
  SuperMorphism sum = SuperMorphism::zero(fam.ambient, fam.ambient);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& p = fam.members[i];
    if (!(p.source() == fam.ambient) || !p.is_endomorphism())
      throw std::invalid_argument("ProjectorFamily: member is not an endomorphism of the ambient space");
    if (!(p * p == p)) {
      c.idempotent = false;
      why << "member " << fam.label(i) << " is not idempotent; ";
    }
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if (i == j) continue;
      if (!(p * fam.members[j]).is_zero()) {
        c.orthogonal = false;
        why << "members " << fam.label(i) << "," << fam.label(j) << " are not orthogonal; ";
      }
    }
    sum = sum + p;
  }
  if (!(sum == SuperMorphism::identity(fam.ambient))) {
    c.complete = false;
    why << "members do not sum to the identity; ";
  }
  c.detail = why.str();
  return c;
}

inline ProjectorFamily realization(const ProjectorFamily& fam) {
  ProjectorFamily r{fam.ambient.with_order(1), {}, fam.labels};
  for (const auto& m : fam.members) r.members.push_back(supercat::realization(m));
  return r;
}

struct LiftResult {
  SuperMorphism idempotent;
  int iterations = 0;
};

/// Newton iteration e ← 3e² − 2e³; each step squares the error ideal, so at
/// most ⌈log₂ k⌉ steps are needed.
inline LiftResult lift_idempotent_counted(const SuperMorphism& start) {
  if (!start.is_endomorphism()) throw std::invalid_argument("lift_idempotent: not an endomorphism");
  const SuperMorphism r = supercat::realization(start);
  if (!(r * r == r)) throw std::invalid_argument("lift_idempotent: realization of the start is not idempotent");
  LiftResult out{start, 0};
  const Rational three(3), two(2);
  while (true) {
    const SuperMorphism sq = out.idempotent * out.idempotent;
    if (sq == out.idempotent) return out;
    const SuperMorphism cube = sq * out.idempotent;
    out.idempotent = three * sq - two * cube;
    ++out.iterations;
    if (out.iterations > kMaxOrder) throw std::logic_error("lift_idempotent: Newton iteration did not converge");
  }
}

inline SuperMorphism lift_idempotent(const SuperMorphism& start) { return lift_idempotent_counted(start).idempotent; }

/// Lifts a complete orthogonal family from order 1 to order k.
///
/// Members are lifted in list order; member i starts from its residue plus a
/// seeded ε-perturbation (none when seed == 0), is compressed into the
/// complement Q = 1 − Σ_{j<i} e_j and re-lifted; the last member is Q itself.
inline ProjectorFamily lift_family(const ProjectorFamily& residues, int order, std::uint64_t perturbation_seed) {
  if (residues.order() != 1) throw std::invalid_argument("lift_family: residues must be given over Q (order 1)");
  if (residues.members.empty()) throw std::invalid_argument("lift_family: empty family");
  const FamilyCheck chk = check_family(residues);
  if (!chk.ok()) throw std::invalid_argument("lift_family: residues are not a complete orthogonal family: " + chk.detail);
  const SuperSpace x = residues.ambient.with_order(order);
  Rng rng(perturbation_seed);
  ProjectorFamily out{x, {}, residues.labels};
  SuperMorphism complement = SuperMorphism::identity(x);
  for (std::size_t i = 0; i + 1 < residues.size(); ++i) {
    SuperMorphism f(x, x, residues.members[i].matrix().with_order(order), supercat::trusted);
    if (perturbation_seed != 0) f = f + random::hom_trivial(x, rng);
    const SuperMorphism e = lift_idempotent(complement * f * complement);
    out.members.push_back(e);
    complement = complement - e;
  }
  out.members.push_back(complement);
  return out;
}

/// Conjugation of a family by a unit: u⁻¹ π_i u.
inline ProjectorFamily conjugate(const ProjectorFamily& fam, const SuperMorphism& u) {
  const SuperMorphism inv = supercat::inverse(u);
  ProjectorFamily out{fam.ambient, {}, fam.labels};
  for (const auto& p : fam.members) out.members.push_back(inv * p * u);
  return out;
}

struct ConjugatingUnit {
  SuperMorphism unit;
  SuperMorphism inverse;
};

inline void require_matching(const ProjectorFamily& a, const ProjectorFamily& b, const char* what) {
  if (!(a.ambient == b.ambient) || a.size() != b.size())
    throw std::invalid_argument(std::string(what) + ": families live on different spaces or have different sizes");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(supercat::realization(a.members[i]) == supercat::realization(b.members[i])))
      throw std::invalid_argument(std::string(what) + ": realizations of member " + std::to_string(a.label(i)) +
                                  " differ");
}

/// u = Σ π̃_i π_i, which satisfies u∘π_i = π̃_i∘u and u ≡ 1 mod ε.
inline ConjugatingUnit conjugating_unit(const ProjectorFamily& fam, const ProjectorFamily& fam2) {
  for (const auto* f : {&fam, &fam2}) {
    const FamilyCheck c = check_family(*f);
    if (!c.ok()) throw std::invalid_argument("conjugating_unit: " + c.detail);
  }
  require_matching(fam, fam2, "conjugating_unit");
  SuperMorphism u = SuperMorphism::zero(fam.ambient, fam.ambient);
  for (std::size_t i = 0; i < fam.size(); ++i) u = u + fam2.members[i] * fam.members[i];
  // u = 1 + n with n nilpotent: u⁻¹ = Σ_{j<k} (−n)^j.
  const SuperMorphism id = SuperMorphism::identity(fam.ambient);
  const SuperMorphism neg_n = id - u;
  SuperMorphism term = id, inv = id;
  for (int j = 1; j < fam.order(); ++j) {
    term = term * neg_n;
    inv = inv + term;
  }
  return {u, inv};
}

struct CornerReport {
  SuperMorphism e;       ///< π∘π̃∘π
  SuperMorphism defect;  ///< e − π
  std::optional<SuperMorphism> corner_inverse;
  bool exact_equality = false;
  SuperMorphism forward;   ///< (X,π) → (X,π̃): π̃∘π
  SuperMorphism backward;  ///< (X,π̃) → (X,π): c∘π∘π̃, c the corner inverse of e
  bool backward_after_forward_is_pi = false;
  bool forward_after_backward_is_pi_tilde = false;
  bool isomorphism() const { return backward_after_forward_is_pi && forward_after_backward_is_pi_tilde; }
};

/// Corner-unit calculus for two idempotents with equal realizations.
///
/// e = π∘π̃∘π always agrees with π modulo ε; the defect is nilpotent in the
/// corner algebra πAπ, so e is a unit there and π̃∘π, c∘π∘π̃ are mutually
/// inverse isomorphisms between the two summands.
inline CornerReport corner_unit_check(const SuperMorphism& pi, const SuperMorphism& pi_tilde) {
  if (!pi.is_idempotent() || !pi_tilde.is_idempotent())
    throw std::invalid_argument("corner_unit_check: inputs must be idempotent endomorphisms");
  if (!(pi.source() == pi_tilde.source()))
    throw std::invalid_argument("corner_unit_check: idempotents on different spaces");
  if (!(supercat::realization(pi) == supercat::realization(pi_tilde)))
    throw std::invalid_argument("corner_unit_check: realizations differ");
  CornerReport r;
  r.e = pi * pi_tilde * pi;
  r.defect = r.e - pi;
  r.exact_equality = r.defect.is_zero();
  SuperMorphism c = pi;
  if (!r.exact_equality) {
    // (π + δ)⁻¹ in πAπ = π − δ + δ² − …
    SuperMorphism term = pi;
    const SuperMorphism neg = -r.defect;
    for (int j = 1; j < pi.order(); ++j) {
      term = term * neg;
      c = c + term;
    }
    r.corner_inverse = c;
  }
  r.forward = pi_tilde * pi;
  r.backward = c * pi * pi_tilde;
  r.backward_after_forward_is_pi = (r.backward * r.forward) == pi;
  r.forward_after_backward_is_pi_tilde = (r.forward * r.backward) == pi_tilde;
  return r;
}

/// Smallest m with f^m = 0 for a homologically trivial endomorphism.
inline int nilpotency_index(const SuperMorphism& f) {
  if (!f.is_endomorphism()) throw std::invalid_argument("nilpotency_index: not an endomorphism");
  if (!supercat::is_hom_trivial(f)) throw hypothesis_error("nilpotency_index: f is not homologically trivial");
  SuperMorphism p = f;
  for (int m = 1;; ++m) {
    if (p.is_zero()) return m;
    if (m > f.order()) throw std::logic_error("nilpotency_index: exceeded the truncation order");
    p = p * f;
  }
}

struct BlockStatus {
  int source = 0;  ///< s in π_t∘q∘π_s
  int target = 0;  ///< t
  bool zero = true;
  bool epsilon_free = true;
};

struct RigidityCertificate {
  bool within_hypotheses = true;
  std::string violation;  ///< first structural hypothesis that fails
  bool hom_trivial = false;
  bool decomposition_exact = false;  ///< Σ_{s,t} π_t q π_s = q
  std::vector<BlockStatus> blocks;
  bool certified_zero = false;
};

/// Weight carried by a weight-homogeneous, ε-free idempotent (nullopt for
/// the zero member, which is homogeneous of every weight).
inline std::optional<int> homogeneous_weight(const SuperMorphism& p) {
  if (!p.matrix().is_constant()) throw hypothesis_error("member has an ε-part, so it is not weight-homogeneous");
  std::optional<int> w;
  const auto& x = p.source();
  for (std::size_t i = 0; i < p.matrix().rows(); ++i)
    for (const auto& e : p.matrix().row(i)) {
      for (int wt : {x.weight(i), x.weight(e.col)}) {
        if (w && *w != wt) throw hypothesis_error("member mixes weights");
        w = wt;
      }
    }
  return w;
}

/// Blockwise certificate that a homologically trivial q vanishes in a model
/// where Hom(N_s, N_t) = 0 for s ≠ t and End(N_s) has no ε-part.
///
/// The structural hypotheses are checked on q itself; when they fail, the
/// certificate records which one and does not claim anything about q.
inline RigidityCertificate murre_rigidity(const ProjectorFamily& blocks, const SuperMorphism& q) {
  if (!(q.source() == blocks.ambient) || !q.is_endomorphism())
    throw std::invalid_argument("murre_rigidity: q is not an endomorphism of the block ambient");
  RigidityCertificate cert;
  const FamilyCheck chk = check_family(blocks);
  if (!chk.ok()) {
    cert.within_hypotheses = false;
    cert.violation = "blocks are not a complete orthogonal family: " + chk.detail;
    return cert;
  }
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    try {
      (void)homogeneous_weight(blocks.members[s]);
    } catch (const hypothesis_error& e) {
      cert.within_hypotheses = false;
      cert.violation = "block " + std::to_string(blocks.label(s)) + ": " + e.what();
      return cert;
    }
  }
  cert.hom_trivial = supercat::is_hom_trivial(q);
  SuperMorphism recomposed = SuperMorphism::zero(q.source(), q.target());
  for (std::size_t s = 0; s < blocks.size(); ++s)
    for (std::size_t t = 0; t < blocks.size(); ++t) {
      const SuperMorphism f = blocks.members[t] * q * blocks.members[s];
      BlockStatus b{blocks.label(s), blocks.label(t), f.is_zero(), f.matrix().is_constant()};
      if (s != t && !b.zero && cert.within_hypotheses) {
        cert.within_hypotheses = false;
        cert.violation = "model outside the block-rigidity hypotheses: off-diagonal block (" + std::to_string(b.source) + " -> " +
                         std::to_string(b.target) + ") is nonzero";
      }
      if (s == t && !b.epsilon_free && cert.within_hypotheses) {
        cert.within_hypotheses = false;
        cert.violation = "model outside the block-rigidity hypotheses: diagonal block " + std::to_string(b.source) +
                         " has an ε-part";
      }
      cert.blocks.push_back(b);
      recomposed = recomposed + f;
    }
  cert.decomposition_exact = recomposed == q;
  if (cert.within_hypotheses && cert.hom_trivial) {
    bool all_zero = true;
    for (const auto& b : cert.blocks) all_zero = all_zero && b.zero;
    cert.certified_zero = all_zero && cert.decomposition_exact && q.is_zero();
  }
  return cert;
}

/// Image of q in the model category where the block hypotheses hold: keeps
/// only the ε-free parts of the diagonal blocks π_s q π_s.
inline SuperMorphism rigidify(const ProjectorFamily& blocks, const SuperMorphism& q) {
  SuperMorphism out = SuperMorphism::zero(q.source(), q.target());
  for (const auto& p : blocks.members) {
    const SuperMorphism d = p * q * p;
    out = out + SuperMorphism(d.source(), d.target(), d.matrix().coefficient(0).with_order(d.order()), supercat::trusted);
  }
  return out;
}

}  // namespace kimura::lifting
