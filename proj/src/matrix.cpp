#include "homdend/matrix.hpp"

namespace homdend {

Vec zero_vec(Field field, int n) {
  return Vec(static_cast<std::size_t>(n), Scalar::zero(field));
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector sizes differ");
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector sizes differ");
  Vec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec out = v;
  for (auto& x : out) x *= c;
  return out;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::identity(Field field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Matrix m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      fail(ErrorKind::DimensionMismatch, "ragged row list");
    }
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape");
  if (field_ != other.field_) fail(ErrorKind::FieldMismatch, "matrix product fields");
  Matrix out(field_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Scalar& bkj = other.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    fail(ErrorKind::DimensionMismatch, "matrix sum shape");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    fail(ErrorKind::DimensionMismatch, "matrix difference shape");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    fail(ErrorKind::DimensionMismatch, "matrix-vector shape");
  }
  Vec out = zero_vec(field_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || field_ != other.field_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != other.entries_[i]) return false;
  }
  return true;
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}, 0};
  Matrix& a = res.matrix;
  int pivot_row = 0;
  for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    int sel = -1;
    for (int r = pivot_row; r < a.rows(); ++r) {
      if (!a.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
    }
    Scalar inv = a.at(pivot_row, col).inverse();
    for (int c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      const Scalar factor = a.at(r, col);
      if (factor.is_zero()) continue;
      for (int c = col; c < a.cols(); ++c) {
        if (!a.at(pivot_row, c).is_zero()) a.at(r, c) -= factor * a.at(pivot_row, c);
      }
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

bool SubspaceBasis::contains(const Vec& v) const { return coset_reduce(*this, v).in_subspace; }

SubspaceBasis span_of(Field field, int ambient_dim, const std::vector<Vec>& spanning) {
  SubspaceBasis basis;
  basis.field = field;
  basis.ambient_dim = ambient_dim;
  if (spanning.empty()) return basis;
  RrefResult r = rref(Matrix::from_rows(field, spanning));
  for (int i = 0; i < r.rank; ++i) {
    Vec row = zero_vec(field, ambient_dim);
    for (int j = 0; j < ambient_dim; ++j) row[j] = r.matrix.at(i, j);
    basis.vectors.push_back(std::move(row));
    basis.pivots.push_back(r.pivot_cols[i]);
  }
  return basis;
}

SubspaceBasis kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivot_cols) is_pivot[p] = true;

  std::vector<Vec> vectors;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = zero_vec(m.field(), m.cols());
    v[free_col] = Scalar::one(m.field());
    for (int i = 0; i < r.rank; ++i) {
      v[r.pivot_cols[i]] = -r.matrix.at(i, free_col);
    }
    vectors.push_back(std::move(v));
  }
  return span_of(m.field(), m.cols(), vectors);
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) {
    fail(ErrorKind::DimensionMismatch, "rhs length does not match row count");
  }
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  RrefResult r = rref(aug);
  for (int p : r.pivot_cols) {
    if (p == m.cols()) return std::nullopt;  // inconsistent system
  }
  Vec x = zero_vec(m.field(), m.cols());
  for (int i = 0; i < r.rank; ++i) {
    x[r.pivot_cols[i]] = r.matrix.at(i, m.cols());
  }
  return x;
}

CosetReduction coset_reduce(const SubspaceBasis& sub, const Vec& v) {
  if (static_cast<int>(v.size()) != sub.ambient_dim) {
    fail(ErrorKind::DimensionMismatch, "vector does not match ambient dimension");
  }
  CosetReduction out{v, false};
  for (int i = 0; i < sub.dim(); ++i) {
    const Scalar coeff = out.representative[sub.pivots[i]];
    if (coeff.is_zero()) continue;
    out.representative = vec_sub(out.representative, vec_scale(coeff, sub.vectors[i]));
  }
  out.in_subspace = vec_is_zero(out.representative);
  return out;
}

}  // namespace homdend
