#pragma once

#include "kimura/errors.hpp"
#include "kimura/matrix.hpp"
#include "kimura/symgroup.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

// The model tensor category: finite-dimensional parity- and weight-graded
// spaces over Q[ε]/(ε^k), Koszul-signed symmetry, duals and supertrace.

namespace kimura::supercat {

inline constexpr std::size_t kDefaultDimensionCap = 4096;

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) { return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b)); }
inline int parity_bit(Parity p) { return static_cast<int>(p); }

struct BasisVector {
  Parity parity = Parity::even;
  int weight = 0;
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

class SuperSpace {
public:
  SuperSpace() = default;
  SuperSpace(std::vector<BasisVector> basis, int order) : basis_(std::move(basis)), order_(order) {
    (void)TruncatedScalar(order);
  }

  /// (p|q): p even vectors followed by q odd vectors.
  static SuperSpace make(int p, int q, int order, int even_weight = 0, int odd_weight = 0) {
    if (p < 0 || q < 0) throw std::invalid_argument("SuperSpace::make: negative dimension");
    std::vector<BasisVector> b;
    for (int i = 0; i < p; ++i) b.push_back({Parity::even, even_weight});
    for (int i = 0; i < q; ++i) b.push_back({Parity::odd, odd_weight});
    return SuperSpace(std::move(b), order);
  }
  static SuperSpace unit(int order) { return make(1, 0, order); }

  std::size_t dimension() const noexcept { return basis_.size(); }
  int order() const noexcept { return order_; }
  const std::vector<BasisVector>& basis() const noexcept { return basis_; }
  const BasisVector& operator[](std::size_t i) const { return basis_.at(i); }
  Parity parity(std::size_t i) const { return basis_.at(i).parity; }
  int weight(std::size_t i) const { return basis_.at(i).weight; }

  int even_dimension() const {
    int p = 0;
    for (const auto& b : basis_) p += b.parity == Parity::even;
    return p;
  }
  int odd_dimension() const { return static_cast<int>(basis_.size()) - even_dimension(); }

  SuperSpace with_order(int order) const { return SuperSpace(basis_, order); }
  SuperSpace shifted(int dw) const {
    auto b = basis_;
    for (auto& v : b) v.weight += dw;
    return SuperSpace(std::move(b), order_);
  }
  SuperSpace restricted(const std::vector<std::size_t>& idx) const {
    std::vector<BasisVector> b;
    for (auto i : idx) b.push_back(basis_.at(i));
    return SuperSpace(std::move(b), order_);
  }

  std::string str() const {
    std::ostringstream os;
    os << "(" << even_dimension() << "|" << odd_dimension() << ")";
    return os.str();
  }

  friend bool operator==(const SuperSpace&, const SuperSpace&) = default;

private:
  std::vector<BasisVector> basis_;
  int order_ = 1;
};

inline void require_same_order(const SuperSpace& x, const SuperSpace& y, const char* what) {
  if (x.order() != y.order())
    throw std::invalid_argument(std::string(what) + ": mismatched truncation orders " + std::to_string(x.order()) +
                                " and " + std::to_string(y.order()));
}

/// Ordered product basis, left factor most significant.
inline SuperSpace tensor(const SuperSpace& x, const SuperSpace& y) {
  require_same_order(x, y, "tensor");
  std::vector<BasisVector> b;
  b.reserve(x.dimension() * y.dimension());
  for (const auto& u : x.basis())
    for (const auto& v : y.basis()) b.push_back({u.parity + v.parity, u.weight + v.weight});
  return SuperSpace(std::move(b), x.order());
}

inline std::size_t checked_power(std::size_t base, int n, std::size_t cap) {
  std::size_t d = 1;
  for (int i = 0; i < n; ++i) {
    if (base != 0 && d > cap / base) throw size_error("tensor power dimension exceeds cap " + std::to_string(cap));
    d *= base;
  }
  if (d > cap) throw size_error("tensor power dimension " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
  return d;
}

inline SuperSpace tensor_power(const SuperSpace& x, int n, std::size_t cap = kDefaultDimensionCap) {
  if (n < 0) throw std::invalid_argument("tensor_power: negative exponent");
  checked_power(x.dimension(), n, cap);
  SuperSpace out = SuperSpace::unit(x.order());
  for (int i = 0; i < n; ++i) out = tensor(out, x);
  return out;
}

inline SuperSpace direct_sum(const SuperSpace& x, const SuperSpace& y) {
  require_same_order(x, y, "direct_sum");
  auto b = x.basis();
  b.insert(b.end(), y.basis().begin(), y.basis().end());
  return SuperSpace(std::move(b), x.order());
}

/// Dual basis e^i: same parity, negated weight.
inline SuperSpace dual(const SuperSpace& x) {
  auto b = x.basis();
  for (auto& v : b) v.weight = -v.weight;
  return SuperSpace(std::move(b), x.order());
}

/// Tag selecting the unchecked construction path for morphisms that are
/// parity- and weight-compatible by construction.
struct trusted_t {};
inline constexpr trusted_t trusted{};

/// Morphism source → target; the matrix is (dim target) × (dim source).
///
/// Entries preserve parity at every ε-order; the ε^0 block additionally
/// preserves weight.
class SuperMorphism {
public:
  SuperMorphism() = default;
  SuperMorphism(SuperSpace source, SuperSpace target, Matrix m)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {
    validate();
  }
  SuperMorphism(SuperSpace source, SuperSpace target, Matrix m, trusted_t)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {}

  static SuperMorphism identity(const SuperSpace& x) {
    return SuperMorphism(x, x, Matrix::identity(x.dimension(), x.order()), trusted);
  }
  static SuperMorphism zero(const SuperSpace& x, const SuperSpace& y) {
    require_same_order(x, y, "zero morphism");
    return SuperMorphism(x, y, Matrix(y.dimension(), x.dimension(), x.order()), trusted);
  }

  const SuperSpace& source() const noexcept { return source_; }
  const SuperSpace& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  int order() const noexcept { return source_.order(); }
  bool is_endomorphism() const { return source_ == target_; }
  bool is_zero() const { return matrix_.is_zero(); }
  bool is_idempotent() const { return is_endomorphism() && (*this) * (*this) == *this; }

  /// Throws std::invalid_argument if the parity/weight contract is violated.
  void validate() const {
    require_same_order(source_, target_, "SuperMorphism");
    if (matrix_.rows() != target_.dimension() || matrix_.cols() != source_.dimension())
      throw std::invalid_argument("SuperMorphism: matrix shape does not match source/target");
    if (matrix_.order() != source_.order()) throw std::invalid_argument("SuperMorphism: matrix order mismatch");
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
      for (const auto& e : matrix_.row(i)) {
        if (target_.parity(i) != source_.parity(e.col))
          throw std::invalid_argument("SuperMorphism: entry (" + std::to_string(i) + "," + std::to_string(e.col) +
                                      ") mixes parities");
        if (!e.value[0].is_zero() && target_.weight(i) != source_.weight(e.col))
          throw std::invalid_argument("SuperMorphism: ε^0 entry (" + std::to_string(i) + "," + std::to_string(e.col) +
                                      ") changes weight");
      }
  }

  /// Composition: (g * f) = g ∘ f.
  friend SuperMorphism operator*(const SuperMorphism& g, const SuperMorphism& f) {
    if (!(f.target_ == g.source_)) throw std::invalid_argument("compose: target of f is not source of g");
    return SuperMorphism(f.source_, g.target_, g.matrix_ * f.matrix_, trusted);
  }
  friend SuperMorphism operator+(const SuperMorphism& a, const SuperMorphism& b) {
    a.same_shape(b);
    return SuperMorphism(a.source_, a.target_, a.matrix_ + b.matrix_, trusted);
  }
  friend SuperMorphism operator-(const SuperMorphism& a, const SuperMorphism& b) {
    a.same_shape(b);
    return SuperMorphism(a.source_, a.target_, a.matrix_ - b.matrix_, trusted);
  }
  SuperMorphism operator-() const { return SuperMorphism(source_, target_, -matrix_, trusted); }
  friend SuperMorphism operator*(const TruncatedScalar& s, const SuperMorphism& f) {
    return SuperMorphism(f.source_, f.target_, s * f.matrix_, trusted);
  }
  friend SuperMorphism operator*(const Rational& r, const SuperMorphism& f) {
    return SuperMorphism(f.source_, f.target_, r * f.matrix_, trusted);
  }

  friend bool operator==(const SuperMorphism&, const SuperMorphism&) = default;

private:
  void same_shape(const SuperMorphism& b) const {
    if (!(source_ == b.source_) || !(target_ == b.target_))
      throw std::invalid_argument("SuperMorphism sum: different source or target");
  }

  SuperSpace source_;
  SuperSpace target_;
  Matrix matrix_;
};

/// Block Kronecker product. All morphisms of the model are parity-even, so
/// no Koszul signs enter.
inline SuperMorphism tensor_mor(const SuperMorphism& f, const SuperMorphism& g) {
  require_same_order(f.source(), g.source(), "tensor_mor");
  return SuperMorphism(tensor(f.source(), g.source()), tensor(f.target(), g.target()),
                       kronecker(f.matrix(), g.matrix()), trusted);
}

/// e_i ⊗ e_j ↦ (−1)^{|e_i||e_j|} e_j ⊗ e_i.
inline SuperMorphism braiding(const SuperSpace& x, const SuperSpace& y) {
  require_same_order(x, y, "braiding");
  const std::size_t dx = x.dimension(), dy = y.dimension();
  const int k = x.order();
  std::vector<Triplet> t;
  t.reserve(dx * dy);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dy; ++j) {
      const int s = (x.parity(i) == Parity::odd && y.parity(j) == Parity::odd) ? -1 : 1;
      t.push_back({static_cast<std::uint32_t>(j * dx + i), static_cast<std::uint32_t>(i * dy + j),
                   TruncatedScalar(Rational(s), k)});
    }
  return SuperMorphism(tensor(x, y), tensor(y, x), Matrix::from_triplets(dx * dy, dy * dx, k, std::move(t)), trusted);
}

/// Multi-index helper for X^⊗n (digit 0 most significant).
inline void decode_index(std::size_t index, std::size_t base, std::vector<std::size_t>& digits) {
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    digits[pos] = index % base;
    index /= base;
  }
}

/// Image of the basis vector with digits `in` under Γ_σ, and its Koszul sign.
///
/// Output slot j carries input factor σ(j); the sign is (−1) to the number
/// of inversions of σ among the odd factors.
inline std::pair<std::size_t, int> permute_basis_vector(const symgroup::Permutation& sigma, const SuperSpace& x,
                                                         const std::vector<std::size_t>& in) {
  const std::size_t n = in.size();
  const std::size_t base = x.dimension();
  std::size_t out = 0;
  for (std::size_t j = 0; j < n; ++j) out = out * base + in[static_cast<std::size_t>(sigma(static_cast<int>(j)))];
  int inversions = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const int sa = sigma(static_cast<int>(a));
    if (x.parity(in[static_cast<std::size_t>(sa)]) != Parity::odd) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      const int sb = sigma(static_cast<int>(b));
      if (sa > sb && x.parity(in[static_cast<std::size_t>(sb)]) == Parity::odd) ++inversions;
    }
  }
  return {out, inversions % 2 == 0 ? 1 : -1};
}

/// Γ_σ on X^⊗n as a signed permutation matrix.
inline SuperMorphism permutation_action(const symgroup::Permutation& sigma, const SuperSpace& x, int n,
                                        std::size_t cap = kDefaultDimensionCap) {
  if (sigma.degree() != n) throw std::invalid_argument("permutation_action: σ has the wrong degree");
  const SuperSpace xn = tensor_power(x, n, cap);
  const std::size_t dim = xn.dimension();
  const int k = x.order();
  std::vector<std::size_t> digits(static_cast<std::size_t>(n));
  std::vector<Triplet> t;
  t.reserve(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    decode_index(col, x.dimension(), digits);
    auto [row, sign] = permute_basis_vector(sigma, x, digits);
    t.push_back({static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col), TruncatedScalar(Rational(sign), k)});
  }
  return SuperMorphism(xn, xn, Matrix::from_triplets(dim, dim, k, std::move(t)), trusted);
}

/// ε_X : X ⊗ X* → 1, e_i ⊗ e^j ↦ δ_ij.
inline SuperMorphism evaluation(const SuperSpace& x) {
  const std::size_t d = x.dimension();
  const int k = x.order();
  Matrix m(1, d * d, k);
  for (std::size_t i = 0; i < d; ++i) m.set(0, i * d + i, TruncatedScalar(Rational(1), k));
  return SuperMorphism(tensor(x, dual(x)), SuperSpace::unit(k), std::move(m), trusted);
}

/// 1 → X* ⊗ X, 1 ↦ Σ e^i ⊗ e_i (the preimage of id_X under i_{X,X}).
inline SuperMorphism coevaluation(const SuperSpace& x) {
  const std::size_t d = x.dimension();
  const int k = x.order();
  Matrix m(d * d, 1, k);
  for (std::size_t i = 0; i < d; ++i) m.set(i * d + i, 0, TruncatedScalar(Rational(1), k));
  return SuperMorphism(SuperSpace::unit(k), tensor(dual(x), x), std::move(m), trusted);
}

/// f* : Y* → X* for f : X → Y (transpose; f is parity-even).
inline SuperMorphism dual_mor(const SuperMorphism& f) {
  return SuperMorphism(dual(f.target()), dual(f.source()), f.matrix().transpose(), trusted);
}

/// Supertrace: even diagonal minus odd diagonal.
inline TruncatedScalar trace(const SuperMorphism& f) {
  if (!f.is_endomorphism()) throw std::invalid_argument("trace: not an endomorphism");
  TruncatedScalar t(f.order());
  const auto& x = f.source();
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    const TruncatedScalar v = f.matrix().get(i, i);
    if (x.parity(i) == Parity::even) t += v;
    else t -= v;
  }
  return t;
}

/// tr(h) = ε_{X*} ∘ i^{-1}_{X,X}(h), built from the structure morphisms,
/// with ε_{X*} = ε_X ∘ c_{X*,X} under X** ≅ X. Quadratic in dim X; used to
/// cross-check trace().
inline TruncatedScalar categorical_trace(const SuperMorphism& h) {
  if (!h.is_endomorphism()) throw std::invalid_argument("categorical_trace: not an endomorphism");
  const SuperSpace& x = h.source();
  const SuperMorphism name = tensor_mor(SuperMorphism::identity(dual(x)), h) * coevaluation(x);
  const SuperMorphism eps_dual = evaluation(x) * braiding(dual(x), x);
  const SuperMorphism scalar = eps_dual * name;
  return scalar.matrix().get(0, 0);
}

inline TruncatedScalar dim(const SuperSpace& x) { return trace(SuperMorphism::identity(x)); }

/// Realization functor: sets ε to 0.
inline SuperMorphism realization(const SuperMorphism& f) {
  return SuperMorphism(f.source().with_order(1), f.target().with_order(1), f.matrix().coefficient(0), trusted);
}

inline bool is_hom_trivial(const SuperMorphism& f) { return realization(f).is_zero(); }

/// Projector onto the basis vectors of the given parity.
inline SuperMorphism parity_projector(const SuperSpace& x, Parity p) {
  Matrix m(x.dimension(), x.dimension(), x.order());
  for (std::size_t i = 0; i < x.dimension(); ++i)
    if (x.parity(i) == p) m.set(i, i, TruncatedScalar(Rational(1), x.order()));
  return SuperMorphism(x, x, std::move(m), trusted);
}

/// Projector onto the basis vectors of the given weight.
inline SuperMorphism weight_projector(const SuperSpace& x, int w) {
  Matrix m(x.dimension(), x.dimension(), x.order());
  for (std::size_t i = 0; i < x.dimension(); ++i)
    if (x.weight(i) == w) m.set(i, i, TruncatedScalar(Rational(1), x.order()));
  return SuperMorphism(x, x, std::move(m), trusted);
}

/// Inverse of a unit endomorphism (realization invertible).
inline SuperMorphism inverse(const SuperMorphism& u) {
  if (!u.is_endomorphism()) throw std::invalid_argument("inverse: not an endomorphism");
  return SuperMorphism(u.source(), u.target(), linalg::inverse(u.matrix()), trusted);
}

inline SuperMorphism power(const SuperMorphism& f, unsigned e) {
  SuperMorphism r = SuperMorphism::identity(f.source());
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

}  // namespace kimura::supercat
