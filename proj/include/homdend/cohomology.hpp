#pragma once

#include <map>

#include "homdend/operad.hpp"

namespace homdend {

inline constexpr int kDefaultDegreeCap = 4;

/// A twisted operad together with its multiplication element: everything a
/// cochain-complex computation needs. Basis computations are cached per
/// degree, so one Complex instance is not safe for concurrent use; parallel
/// callers should work on distinct instances (all structure data is
/// immutable and freely shareable).
struct Complex {
  TwistedOperad op;
  Cochain mult;
  int degree_cap = kDefaultDegreeCap;
  mutable std::map<int, struct CochainBasis> bases;

  Cochain differential(const Cochain& f) const { return op.differential(mult, f); }
};

Complex make_complex(const HomAssocAlgebra& a, bool untwisted = false,
                     int degree_cap = kDefaultDegreeCap, bool validate = true);
Complex make_complex(const HomDendAlgebra& a, bool untwisted = false,
                     int degree_cap = kDefaultDegreeCap, bool validate = true);
Complex make_complex(const HomAssocCoalgebra& c, bool untwisted = false,
                     int degree_cap = kDefaultDegreeCap, bool validate = true);
Complex make_complex(const HomDendCoalgebra& c, bool untwisted = false,
                     int degree_cap = kDefaultDegreeCap, bool validate = true);

/// Basis of the degree-n cochain group, i.e. of the kernel of the
/// equivariance constraint inside the ambient coefficient space.
struct CochainBasis {
  Flavor flavor = Flavor::Dend;
  int degree = 1;
  int dim = 1;
  Field field = Field::rationals();
  std::size_t ambient_dim = 0;
  SubspaceBasis basis;

  int size() const { return basis.dim(); }
  Cochain decode_ambient(const Vec& ambient) const;
  Cochain decode(const Vec& coords) const;       // coords in this basis
  Vec encode(const Cochain& f) const;            // ambient coordinates
  /// Coordinates of f in this basis; throws InternalInconsistency if f is
  /// not in the equivariant subspace.
  Vec coordinates(const Cochain& f) const;
};

const CochainBasis& equivariant_basis(const Complex& cx, int n);

/// Matrix of the differential C^n -> C^{n+1} in the equivariant bases.
Matrix differential_matrix(const Complex& cx, int n);

struct CohomologyReport {
  Flavor flavor = Flavor::Dend;
  int degree = 1;
  int dim_cochains = 0;
  int dim_cocycles = 0;
  int dim_coboundaries = 0;
  int betti = 0;
  std::vector<Vec> representative_coords;  // degree-n equivariant coordinates
  std::vector<Cochain> representatives;    // the same cocycles, decoded
};

CohomologyReport cohomology_report(const Complex& cx, int n);

/// Independent first-cohomology oracle: solves the derivation equations for
/// both products together with commutation with alpha as one linear system,
/// with no cochain machinery involved.
SubspaceBasis derivation_space(const HomDendAlgebra& a, bool validate = true);

/// Term-by-term evaluation of the explicit differential formulas on basis
/// tuples. Shares no composition code with TwistedOperad::differential; the
/// two routes must agree bit-exactly.
Cochain brute_force_differential(const HomAssocAlgebra& a, const Cochain& f,
                                 bool untwisted = false);
Cochain brute_force_differential(const HomDendAlgebra& a, const Cochain& f,
                                 bool untwisted = false);
Cochain brute_force_differential(const HomAssocCoalgebra& c, const Cochain& f,
                                 bool untwisted = false);
Cochain brute_force_differential(const HomDendCoalgebra& c, const Cochain& f,
                                 bool untwisted = false);

}  // namespace homdend
