#pragma once

#include <cstdint>

#include "homdend/deformation.hpp"

namespace homdend {

/// splitmix64; hand-rolled so seeded runs are reproducible across platforms
/// and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  int int_in(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int percent) { return below(100) < percent; }

  /// Small exact scalar: numerators in [-3, 3], denominators in {1, 2} over Q;
  /// small residues over GF(p).
  Scalar small_scalar(Field field, bool nonzero = false);

 private:
  std::uint64_t state_;
};

Tensor3 random_cube(Rng& rng, Field field, int dim, int nonzero_entries);
Matrix random_matrix(Rng& rng, Field field, int rows, int cols, int nonzero_entries);
/// Product of unipotent transvections; exactly invertible with small entries.
Matrix random_invertible(Rng& rng, Field field, int dim);

/// Random valid multiplicative structures. Families: zero products with a
/// random twisting map, two-step nilpotent structures (valid for every
/// parameter choice), twisted catalogue algebras, and random changes of basis
/// of the above.
HomAssocAlgebra random_hom_assoc(Rng& rng, int dim, Field field);
HomDendAlgebra random_hom_dend(Rng& rng, int dim, Field field);
HomAssocCoalgebra random_hom_assoc_coalg(Rng& rng, int dim, Field field);
HomDendCoalgebra random_hom_dend_coalg(Rng& rng, int dim, Field field);

Cochain random_equivariant_cochain(const Complex& cx, int degree, Rng& rng);
/// Random element of ker(delta^2), sampled from the kernel basis with small
/// integer coefficients.
Cochain random_two_cocycle(const Complex& cx, Rng& rng);
/// Gauge with random alpha-commuting components.
FormalAutomorphism random_automorphism(const Complex& cx, int order, Rng& rng);

/// All Rota-Baxter operators with entries in {-1, 0, 1} on the algebra
/// (search is exhaustive over dim <= 2, sampled for dim 3).
std::vector<Matrix> search_rota_baxter(const HomAssocAlgebra& a, Rng& rng, int want);

}  // namespace homdend
