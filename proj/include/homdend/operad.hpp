#pragma once

#include <cstddef>

#include "homdend/combinat.hpp"
#include "homdend/structures.hpp"

namespace homdend {

enum class Flavor { Ass, Dend, CoAss, CoDend };

const char* flavor_name(Flavor flavor);
bool flavor_is_co(Flavor flavor);
bool flavor_has_labels(Flavor flavor);

std::size_t pow_size(int base, int exp);

/// Cochain of one flavor, stored densely as [label][input][output] with
/// row-major multi-indices. Algebra flavors: input index runs over d^degree
/// tuples, output over d. Co flavors: input over d, output over d^degree.
/// Construction performs no equivariance or validity checks.
class Cochain {
 public:
  Cochain(Flavor flavor, int degree, int dim, Field field);

  Flavor flavor() const { return flavor_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const Field& field() const { return field_; }

  int label_count() const { return flavor_has_labels(flavor_) ? degree_ : 1; }
  std::size_t in_size() const { return flavor_is_co(flavor_) ? dim_ : pow_size(dim_, degree_); }
  std::size_t out_size() const { return flavor_is_co(flavor_) ? pow_size(dim_, degree_) : dim_; }
  std::size_t size() const { return coeffs_.size(); }

  Scalar& at(int label, std::size_t in, std::size_t out) {
    return coeffs_[(label * in_size() + in) * out_size() + out];
  }
  const Scalar& at(int label, std::size_t in, std::size_t out) const {
    return coeffs_[(label * in_size() + in) * out_size() + out];
  }
  Scalar& flat(std::size_t idx) { return coeffs_[idx]; }
  const Scalar& flat(std::size_t idx) const { return coeffs_[idx]; }

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain operator-() const;
  Cochain scaled(const Scalar& c) const;
  bool is_zero() const;
  bool operator==(const Cochain& o) const;
  bool operator!=(const Cochain& o) const { return !(*this == o); }

  /// Pre-composes one input slot with a matrix (algebra flavors: slot in
  /// [0, degree); co flavors: slot must be 0).
  Cochain with_input_slot(int slot, const Matrix& p) const;
  /// Post-composes one output slot with a matrix (mirrored roles).
  Cochain with_output_slot(int slot, const Matrix& p) const;

 private:
  Flavor flavor_;
  int degree_;
  int dim_;
  Field field_;
  std::vector<Scalar> coeffs_;
};

/// The twisted operad O(n) of one flavor over a hom-vector space (A, alpha).
/// When `untwisted` is set, every alpha power in the composition formulas is
/// replaced by the identity, which recovers the alpha = id calculus.
class TwistedOperad {
 public:
  TwistedOperad(Flavor flavor, Matrix alpha, bool untwisted = false);

  Flavor flavor() const { return flavor_; }
  int dim() const { return dim_; }
  const Field& field() const { return field_; }
  const Matrix& alpha() const { return alpha_; }
  bool untwisted() const { return untwisted_; }

  const Matrix& alpha_pow(int k) const;

  Cochain zero(int degree) const { return Cochain(flavor_, degree, dim_, field_); }
  Cochain identity_element() const;

  /// Partial composition f •_i g, slot i is 1-based.
  Cochain compose(const Cochain& f, const Cochain& g, int i) const;
  /// f • g = sum_i (-1)^{(i-1)(deg g - 1)} f •_i g.
  Cochain circ(const Cochain& f, const Cochain& g) const;
  /// [f, g] = f•g - (-1)^{(deg f - 1)(deg g - 1)} g•f.
  Cochain bracket(const Cochain& f, const Cochain& g) const;
  /// Cup product (-1)^{deg f * deg g} (mult •_2 g) •_1 f.
  Cochain cup(const Cochain& mult, const Cochain& f, const Cochain& g) const;
  /// Differential induced by the multiplication; see the sign table in the
  /// implementation. Degree raises by one.
  Cochain differential(const Cochain& mult, const Cochain& f) const;

  /// Defect of the cochain condition (alpha-equivariance); zero iff member.
  Cochain equivariance_defect(const Cochain& f) const;
  bool is_equivariant(const Cochain& f) const { return equivariance_defect(f).is_zero(); }

 private:
  void check_cochain(const Cochain& f) const;

  Flavor flavor_;
  int dim_;
  Field field_;
  Matrix alpha_;
  bool untwisted_;
  mutable std::vector<Matrix> pow_cache_;
};

TwistedOperad operad_for(const HomAssocAlgebra& a, bool untwisted = false);
TwistedOperad operad_for(const HomDendAlgebra& a, bool untwisted = false);
TwistedOperad operad_for(const HomAssocCoalgebra& c, bool untwisted = false);
TwistedOperad operad_for(const HomDendCoalgebra& c, bool untwisted = false);

Cochain multiplication_element(const HomAssocAlgebra& a, bool validate = true);
Cochain multiplication_element(const HomDendAlgebra& a, bool validate = true);
Cochain multiplication_element(const HomAssocCoalgebra& c, bool validate = true);
Cochain multiplication_element(const HomDendCoalgebra& c, bool validate = true);

/// Builds the degree-2 dendriform element from raw product tensors without
/// validating the dendriform axioms.
Cochain dend_pair_cochain(const Tensor3& left, const Tensor3& right);
Cochain codend_pair_cochain(const Tensor3& coleft, const Tensor3& coright);

/// Label-summing morphisms: Dend -> Ass and coDend -> coAss.
Cochain sum_morphism(const Cochain& f);

/// Whether the multiplication condition holds: pi • pi = 0 for algebra
/// flavors, mult •_1 mult = mult •_2 mult for co flavors.
bool is_multiplication(const TwistedOperad& op, const Cochain& mult);

}  // namespace homdend
