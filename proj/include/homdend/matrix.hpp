#pragma once

#include <optional>
#include <vector>

#include "homdend/scalar.hpp"

namespace homdend {

using Vec = std::vector<Scalar>;

Vec zero_vec(Field field, int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Dense row-major matrix over one field. Entries are exact scalars.
class Matrix {
 public:
  Matrix(Field field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * cols, Scalar::zero(field)) {}

  static Matrix identity(Field field, int n);
  static Matrix from_rows(Field field, const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix matrix;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Reduced row echelon form with first-nonzero pivoting (deterministic).
RrefResult rref(const Matrix& m);

/// Linearly independent vectors in RREF-pivot canonical form; unique per subspace.
struct SubspaceBasis {
  Field field = Field::rationals();
  int ambient_dim = 0;
  std::vector<Vec> vectors;   // rows of the RREF of any spanning set
  std::vector<int> pivots;    // pivots[i] is the pivot column of vectors[i]

  int dim() const { return static_cast<int>(vectors.size()); }
  bool contains(const Vec& v) const;
};

/// Canonicalizes a spanning set into a SubspaceBasis.
SubspaceBasis span_of(Field field, int ambient_dim, const std::vector<Vec>& spanning);

/// Basis of the null space {x : m x = 0}; dimension = cols - rank.
SubspaceBasis kernel_basis(const Matrix& m);

/// Any particular solution of m x = rhs (free coordinates zero), or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

struct CosetReduction {
  Vec representative;
  bool in_subspace = false;
};

/// Eliminates the pivot coordinates of v against the basis; two vectors in the
/// same coset reduce to the same representative.
CosetReduction coset_reduce(const SubspaceBasis& sub, const Vec& v);

}  // namespace homdend
