#pragma once

#include <string>
#include <vector>

#include "homdend/matrix.hpp"

namespace homdend {

/// Structure-constant cube with independent extents.
/// Algebra products use t[i][j][k]: e_i * e_j = sum_k t[i][j][k] e_k.
/// Comultiplications use t[k][i][j]: D(e_k) = sum_{i,j} t[k][i][j] e_i (x) e_j.
class Tensor3 {
 public:
  Tensor3(Field field, int d0, int d1, int d2)
      : field_(field), d0_(d0), d1_(d1), d2_(d2),
        v_(static_cast<std::size_t>(d0) * d1 * d2, Scalar::zero(field)) {}

  static Tensor3 cube(Field field, int d) { return Tensor3(field, d, d, d); }

  const Field& field() const { return field_; }
  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }

  Scalar& at(int a, int b, int c) {
    return v_[(static_cast<std::size_t>(a) * d1_ + b) * d2_ + c];
  }
  const Scalar& at(int a, int b, int c) const {
    return v_[(static_cast<std::size_t>(a) * d1_ + b) * d2_ + c];
  }

  Tensor3 operator+(const Tensor3& o) const;
  Tensor3 operator-(const Tensor3& o) const;
  bool is_zero() const;
  bool operator==(const Tensor3& o) const;
  bool operator!=(const Tensor3& o) const { return !(*this == o); }

 private:
  Field field_;
  int d0_, d1_, d2_;
  std::vector<Scalar> v_;
};

/// Bilinear extension of the product with constants t to coordinate vectors.
Vec bilinear(const Tensor3& t, const Vec& a, const Vec& b);

struct HomVectorSpace {
  int dim = 0;
  Matrix alpha;  // column convention: alpha(e_i) = sum_j alpha(j, i) e_j

  HomVectorSpace(int d, Matrix a);
  const Field& field() const { return alpha.field(); }
};

struct HomAssocAlgebra {
  HomVectorSpace space;
  Tensor3 mu;
};

struct HomDendAlgebra {
  HomVectorSpace space;
  Tensor3 left;   // a < b
  Tensor3 right;  // a > b
};

struct HomAssocCoalgebra {
  HomVectorSpace space;
  Tensor3 cop;
};

struct HomDendCoalgebra {
  HomVectorSpace space;
  Tensor3 coleft;
  Tensor3 coright;
};

/// Bimodule (M, beta) over a hom-associative algebra.
struct HomRepresentation {
  HomAssocAlgebra base;
  HomVectorSpace module_space;
  Tensor3 act_left;   // [a][m][m']: a m
  Tensor3 act_right;  // [m][a][m']: m a
};

struct Violation {
  std::string identity;
  std::vector<int> tuple;  // 1-based basis indices
  Vec lhs, rhs;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe(int max_items = 8) const;
};

ValidationReport validate_hom_assoc(const HomAssocAlgebra& a);
ValidationReport validate_hom_dend(const HomDendAlgebra& a);
ValidationReport validate_hom_assoc_coalg(const HomAssocCoalgebra& c);
ValidationReport validate_hom_dend_coalg(const HomDendCoalgebra& c);
ValidationReport validate_representation(const HomRepresentation& rep);

/// Throws InvalidInput with the first witnesses if the report is nonempty.
void require_valid(const ValidationReport& report, const std::string& what);

/// a * b = a < b + a > b; the result is hom-associative whenever a is valid.
HomAssocAlgebra induced_assoc(const HomDendAlgebra& a, bool validate = true);

struct PreLieCheckReport {
  Tensor3 diamond;           // a <> b = a > b - b < a
  ValidationReport identity; // left hom-preLie identity on basis triples
};
PreLieCheckReport induced_prelie(const HomDendAlgebra& a, bool validate = true);

struct BracketPair {
  Tensor3 assoc_bracket;   // [a,b] = a*b - b*a
  Tensor3 prelie_bracket;  // [a,b]' = a<>b - b<>a
  bool equal = false;
};
BracketPair induced_lie_brackets(const HomDendAlgebra& a, bool validate = true);

/// Rota-Baxter of weight zero: alpha R = R alpha and R(a)R(b) = R(aR(b) + R(a)b).
ValidationReport check_rota_baxter(const HomAssocAlgebra& a, const Matrix& r);
HomDendAlgebra from_rota_baxter(const HomAssocAlgebra& a, const Matrix& r);

/// O-operator R : M -> A for the representation; alpha R = R beta and
/// R(m)R(n) = R(m R(n) + R(m) n).
ValidationReport check_o_operator(const HomRepresentation& rep, const Matrix& r);
HomDendAlgebra from_o_operator(const HomRepresentation& rep, const Matrix& r);

HomDendCoalgebra dualize(const HomDendAlgebra& a, bool validate = true);
HomDendAlgebra dualize(const HomDendCoalgebra& c, bool validate = true);
HomAssocCoalgebra dualize(const HomAssocAlgebra& a, bool validate = true);
HomAssocAlgebra dualize(const HomAssocCoalgebra& c, bool validate = true);

}  // namespace homdend
