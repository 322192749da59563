#pragma once

#include "kimura/supercat.hpp"

#include <cstdint>
#include <random>

namespace kimura {

/// Seeded source of all randomness in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard; small integers are drawn as lo + (x mod (hi − lo + 1)) rather
/// than through a distribution object, so values are identical across
/// standard-library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  /// Entry of a seeded perturbation, in {−2, …, 2}.
  int perturbation_entry() { return uniform(-2, 2); }

private:
  std::mt19937_64 engine_;
};

namespace random {

using supercat::SuperMorphism;
using supercat::SuperSpace;

/// Parity-preserving matrix x → y whose entries are random in {−2..2} at the
/// ε-orders [min_power, k − 1]. Higher orders are unconstrained by weight; the
/// ε^0 order (if requested) only fills weight-preserving positions.
/// `density` is the percentage of admissible positions that receive an entry.
inline SuperMorphism parity_preserving(const SuperSpace& x, const SuperSpace& y, Rng& rng, int min_power,
                                       int density = 100) {
  supercat::require_same_order(x, y, "random::parity_preserving");
  const int k = x.order();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < y.dimension(); ++i)
    for (std::size_t j = 0; j < x.dimension(); ++j) {
      if (y.parity(i) != x.parity(j)) continue;
      if (density < 100 && rng.uniform(0, 99) >= density) continue;
      TruncatedScalar v(k);
      for (int m = min_power; m < k; ++m) {
        if (m == 0 && y.weight(i) != x.weight(j)) continue;
        v.coefficient(m) = rng.perturbation_entry();
      }
      if (!v.is_zero()) t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), std::move(v)});
    }
  return SuperMorphism(x, y, Matrix::from_triplets(y.dimension(), x.dimension(), k, std::move(t)), supercat::trusted);
}

/// Homologically trivial endomorphism (entries in the ε-ideal).
inline SuperMorphism hom_trivial(const SuperSpace& x, Rng& rng, int density = 100) {
  return parity_preserving(x, x, rng, 1, density);
}

/// Unit 1 + εN with N seeded.
inline SuperMorphism unit(const SuperSpace& x, Rng& rng) {
  return SuperMorphism::identity(x) + hom_trivial(x, rng);
}

/// Parity- and weight-preserving morphism with ε-parts in every order.
inline SuperMorphism morphism(const SuperSpace& x, const SuperSpace& y, Rng& rng, int density = 100) {
  return parity_preserving(x, y, rng, 0, density);
}

}  // namespace random

}  // namespace kimura
