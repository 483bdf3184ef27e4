#pragma once

#include "homdend/cohomology.hpp"

namespace homdend {

/// Degree-1 cochains are linear endomorphisms; conversions both ways.
Matrix endo_matrix(const Cochain& f);
Cochain endo_cochain(Flavor flavor, const Matrix& m);

/// Order-N deformation: terms[q] is the t^q coefficient, a degree-2 cochain;
/// terms[0] is the structure's multiplication element.
struct TruncatedDeformation {
  int order = 0;
  std::vector<Cochain> terms;

  Flavor flavor() const { return terms.at(0).flavor(); }
  bool operator==(const TruncatedDeformation& o) const;
};

TruncatedDeformation trivial_deformation(const Complex& cx, int order);
TruncatedDeformation make_deformation(const Complex& cx, std::vector<Cochain> higher_terms);

/// Gauge: Phi_t = sum Phi_i t^i with Phi_0 = id and every component
/// commuting with alpha.
struct FormalAutomorphism {
  int order = 0;
  std::vector<Matrix> components;  // size order + 1
};

FormalAutomorphism identity_automorphism(Field field, int dim, int order);
FormalAutomorphism compose(const FormalAutomorphism& outer, const FormalAutomorphism& inner);
FormalAutomorphism invert_automorphism(const FormalAutomorphism& phi);

/// Per-order defect sum_{i+j=q} pi_i • pi_j of the deformation equations
/// (for co flavors this is sum Delta_i •_1 Delta_j - sum Delta_i •_2 Delta_j).
Cochain deformation_defect(const Complex& cx, const TruncatedDeformation& d, int q);

struct DeformationCheck {
  struct Failure {
    int order;
    Cochain defect;
  };
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

DeformationCheck check_deformation(const Complex& cx, const TruncatedDeformation& d);

struct InfinitesimalClass {
  bool is_cocycle = false;
  bool is_coboundary = false;  // meaningful only when is_cocycle
  Vec class_coords;            // coset representative, degree-2 basis coordinates
  Cochain representative;
};

InfinitesimalClass is_infinitesimal(const Complex& cx, const Cochain& pi1);

struct EquivalenceWitness {
  bool equivalent = false;
  Matrix phi1;  // delta(phi1) = pi1 - pi1' when equivalent
};

EquivalenceWitness equivalent_infinitesimals(const Complex& cx, const Cochain& pi1,
                                             const Cochain& pi1_prime);

/// Pushforward of the deformation along Phi_t, truncated at the common order:
/// algebra flavor pi'_t = Phi_t o pi_t o (Phi_t^{-1} (x) Phi_t^{-1}),
/// coalgebra flavor Delta'_t = (Phi_t (x) Phi_t) o Delta_t o Phi_t^{-1}.
TruncatedDeformation gauge_transform(const Complex& cx, const TruncatedDeformation& d,
                                     const FormalAutomorphism& phi);

enum class TrivializeVerdict { Trivial, Nontrivial };

struct TrivializeResult {
  TrivializeVerdict verdict = TrivializeVerdict::Trivial;
  TruncatedDeformation transformed;  // gauge applied to the input
  FormalAutomorphism gauge;          // accumulated gauge
  int blocking_order = 0;            // first order with a non-coboundary cocycle
  Vec blocking_class;                // its nonzero class, degree-2 basis coordinates
};

TrivializeResult trivialize(const Complex& cx, const TruncatedDeformation& d);

struct ObstructionClass {
  Cochain theta;      // - sum_{i+j=n+1, i,j>=1} pi_i • pi_j; always a 3-cocycle
  Vec class_coords;   // coset representative modulo coboundaries
  bool vanishes = false;
};

ObstructionClass obstruction(const Complex& cx, const TruncatedDeformation& d);

struct ExtendResult {
  bool extended = false;
  TruncatedDeformation deformation;  // order n+1 on success, input otherwise
  ObstructionClass obstructionClass;
  int solution_space_dim = 0;  // dimension of the degree-2 cocycle space
};

ExtendResult extend(const Complex& cx, const TruncatedDeformation& d);

}  // namespace homdend
