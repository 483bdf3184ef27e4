#include "homdend/structures.hpp"

#include <sstream>

namespace homdend {

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  if (d0_ != o.d0_ || d1_ != o.d1_ || d2_ != o.d2_ || field_ != o.field_) {
    fail(ErrorKind::ShapeMismatch, "tensor sum shape");
  }
  Tensor3 out = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] += o.v_[i];
  return out;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
  if (d0_ != o.d0_ || d1_ != o.d1_ || d2_ != o.d2_ || field_ != o.field_) {
    fail(ErrorKind::ShapeMismatch, "tensor difference shape");
  }
  Tensor3 out = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] -= o.v_[i];
  return out;
}

bool Tensor3::is_zero() const {
  for (const auto& x : v_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Tensor3::operator==(const Tensor3& o) const {
  if (d0_ != o.d0_ || d1_ != o.d1_ || d2_ != o.d2_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] != o.v_[i]) return false;
  }
  return true;
}

Vec bilinear(const Tensor3& t, const Vec& a, const Vec& b) {
  if (static_cast<int>(a.size()) != t.dim0() || static_cast<int>(b.size()) != t.dim1()) {
    fail(ErrorKind::ShapeMismatch, "bilinear argument sizes");
  }
  Vec out = zero_vec(t.field(), t.dim2());
  for (int i = 0; i < t.dim0(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < t.dim1(); ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (int k = 0; k < t.dim2(); ++k) {
        const Scalar& c = t.at(i, j, k);
        if (!c.is_zero()) out[k] += ab * c;
      }
    }
  }
  return out;
}

HomVectorSpace::HomVectorSpace(int d, Matrix a) : dim(d), alpha(std::move(a)) {
  if (dim <= 0) fail(ErrorKind::ShapeMismatch, "dimension must be positive");
  if (alpha.rows() != dim || alpha.cols() != dim) {
    fail(ErrorKind::ShapeMismatch, "alpha must be square of the space dimension");
  }
}

std::string ValidationReport::describe(int max_items) const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violated identities";
  int shown = 0;
  for (const auto& v : violations) {
    if (shown++ == max_items) {
      os << "; ...";
      break;
    }
    os << "; " << v.identity << " at (";
    for (std::size_t i = 0; i < v.tuple.size(); ++i) {
      os << (i ? "," : "") << "e" << v.tuple[i];
    }
    os << "): lhs=[";
    for (std::size_t i = 0; i < v.lhs.size(); ++i) os << (i ? "," : "") << v.lhs[i].str();
    os << "] rhs=[";
    for (std::size_t i = 0; i < v.rhs.size(); ++i) os << (i ? "," : "") << v.rhs[i].str();
    os << "]";
  }
  return os.str();
}

void require_valid(const ValidationReport& report, const std::string& what) {
  if (!report.ok()) {
    fail(ErrorKind::InvalidInput, what + " fails validation: " + report.describe());
  }
}

namespace {

Vec unit(Field field, int d, int i) {
  Vec v = zero_vec(field, d);
  v[i] = Scalar::one(field);
  return v;
}

Vec column(const Matrix& m, int i) {
  Vec v = zero_vec(m.field(), m.rows());
  for (int r = 0; r < m.rows(); ++r) v[r] = m.at(r, i);
  return v;
}

void record(ValidationReport& rep, const std::string& identity, std::vector<int> tuple,
            const Vec& lhs, const Vec& rhs) {
  if (lhs != rhs) rep.violations.push_back({identity, std::move(tuple), lhs, rhs});
}

/// d^3 coordinates of ((X (x) alpha) o Y)(e_k); X, Y are comultiplication cubes.
Vec co_left_then(const Tensor3& x, const Matrix& alpha, const Tensor3& y, int k) {
  const Field field = x.field();
  const int d = x.dim0();
  Vec out = zero_vec(field, d * d * d);
  for (int i1 = 0; i1 < d; ++i1) {
    for (int j1 = 0; j1 < d; ++j1) {
      const Scalar& c = y.at(k, i1, j1);
      if (c.is_zero()) continue;
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          const Scalar& x1 = x.at(i1, i, j);
          if (x1.is_zero()) continue;
          for (int l = 0; l < d; ++l) {
            const Scalar& a = alpha.at(l, j1);
            if (!a.is_zero()) out[(i * d + j) * d + l] += c * x1 * a;
          }
        }
      }
    }
  }
  return out;
}

/// d^3 coordinates of ((alpha (x) X) o Y)(e_k).
Vec co_right_then(const Matrix& alpha, const Tensor3& x, const Tensor3& y, int k) {
  const Field field = x.field();
  const int d = x.dim0();
  Vec out = zero_vec(field, d * d * d);
  for (int i1 = 0; i1 < d; ++i1) {
    for (int j1 = 0; j1 < d; ++j1) {
      const Scalar& c = y.at(k, i1, j1);
      if (c.is_zero()) continue;
      for (int i = 0; i < d; ++i) {
        const Scalar& a = alpha.at(i, i1);
        if (a.is_zero()) continue;
        for (int j = 0; j < d; ++j) {
          for (int l = 0; l < d; ++l) {
            const Scalar& x1 = x.at(j1, j, l);
            if (!x1.is_zero()) out[(i * d + j) * d + l] += c * a * x1;
          }
        }
      }
    }
  }
  return out;
}

void check_comultiplicativity(ValidationReport& rep, const std::string& name,
                              const HomVectorSpace& space, const Tensor3& cop) {
  const int d = space.dim;
  const Field field = space.field();
  for (int k = 0; k < d; ++k) {
    // (alpha (x) alpha) o D (e_k) vs D(alpha(e_k))
    Vec lhs = zero_vec(field, d * d);
    for (int i1 = 0; i1 < d; ++i1) {
      for (int j1 = 0; j1 < d; ++j1) {
        const Scalar& c = cop.at(k, i1, j1);
        if (c.is_zero()) continue;
        for (int i = 0; i < d; ++i) {
          if (space.alpha.at(i, i1).is_zero()) continue;
          for (int j = 0; j < d; ++j) {
            const Scalar& a2 = space.alpha.at(j, j1);
            if (!a2.is_zero()) lhs[i * d + j] += c * space.alpha.at(i, i1) * a2;
          }
        }
      }
    }
    Vec rhs = zero_vec(field, d * d);
    for (int k1 = 0; k1 < d; ++k1) {
      const Scalar& a = space.alpha.at(k1, k);
      if (a.is_zero()) continue;
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          const Scalar& c = cop.at(k1, i, j);
          if (!c.is_zero()) rhs[i * d + j] += a * c;
        }
      }
    }
    record(rep, name, {k + 1}, lhs, rhs);
  }
}

}  // namespace

ValidationReport validate_hom_assoc(const HomAssocAlgebra& a) {
  const int d = a.space.dim;
  const Field field = a.space.field();
  if (a.mu.dim0() != d || a.mu.dim1() != d || a.mu.dim2() != d || a.mu.field() != field) {
    fail(ErrorKind::ShapeMismatch, "mu tensor does not match the space");
  }
  ValidationReport rep;
  for (int x = 0; x < d; ++x) {
    const Vec ax = column(a.space.alpha, x);
    for (int y = 0; y < d; ++y) {
      const Vec ey = unit(field, d, y);
      record(rep, "multiplicativity", {x + 1, y + 1},
             a.space.alpha.apply(bilinear(a.mu, unit(field, d, x), ey)),
             bilinear(a.mu, ax, column(a.space.alpha, y)));
      for (int z = 0; z < d; ++z) {
        record(rep, "hom-associativity", {x + 1, y + 1, z + 1},
               bilinear(a.mu, ax, bilinear(a.mu, ey, unit(field, d, z))),
               bilinear(a.mu, bilinear(a.mu, unit(field, d, x), ey), column(a.space.alpha, z)));
      }
    }
  }
  return rep;
}

ValidationReport validate_hom_dend(const HomDendAlgebra& a) {
  const int d = a.space.dim;
  const Field field = a.space.field();
  for (const Tensor3* t : {&a.left, &a.right}) {
    if (t->dim0() != d || t->dim1() != d || t->dim2() != d || t->field() != field) {
      fail(ErrorKind::ShapeMismatch, "product tensor does not match the space");
    }
  }
  ValidationReport rep;
  const Tensor3 star = a.left + a.right;
  for (int x = 0; x < d; ++x) {
    const Vec ex = unit(field, d, x);
    const Vec ax = column(a.space.alpha, x);
    for (int y = 0; y < d; ++y) {
      const Vec ey = unit(field, d, y);
      const Vec ay = column(a.space.alpha, y);
      record(rep, "multiplicativity(<)", {x + 1, y + 1},
             a.space.alpha.apply(bilinear(a.left, ex, ey)), bilinear(a.left, ax, ay));
      record(rep, "multiplicativity(>)", {x + 1, y + 1},
             a.space.alpha.apply(bilinear(a.right, ex, ey)), bilinear(a.right, ax, ay));
      for (int z = 0; z < d; ++z) {
        const Vec ez = unit(field, d, z);
        const Vec az = column(a.space.alpha, z);
        record(rep, "dendriform-1", {x + 1, y + 1, z + 1},
               bilinear(a.left, bilinear(a.left, ex, ey), az),
               bilinear(a.left, ax, bilinear(star, ey, ez)));
        record(rep, "dendriform-2", {x + 1, y + 1, z + 1},
               bilinear(a.left, bilinear(a.right, ex, ey), az),
               bilinear(a.right, ax, bilinear(a.left, ey, ez)));
        record(rep, "dendriform-3", {x + 1, y + 1, z + 1},
               bilinear(a.right, bilinear(star, ex, ey), az),
               bilinear(a.right, ax, bilinear(a.right, ey, ez)));
      }
    }
  }
  return rep;
}

ValidationReport validate_hom_assoc_coalg(const HomAssocCoalgebra& c) {
  const int d = c.space.dim;
  if (c.cop.dim0() != d || c.cop.dim1() != d || c.cop.dim2() != d || c.cop.field() != c.space.field()) {
    fail(ErrorKind::ShapeMismatch, "comultiplication tensor does not match the space");
  }
  ValidationReport rep;
  for (int k = 0; k < d; ++k) {
    record(rep, "hom-coassociativity", {k + 1},
           co_left_then(c.cop, c.space.alpha, c.cop, k),
           co_right_then(c.space.alpha, c.cop, c.cop, k));
  }
  check_comultiplicativity(rep, "comultiplicativity", c.space, c.cop);
  return rep;
}

ValidationReport validate_hom_dend_coalg(const HomDendCoalgebra& c) {
  const int d = c.space.dim;
  for (const Tensor3* t : {&c.coleft, &c.coright}) {
    if (t->dim0() != d || t->dim1() != d || t->dim2() != d || t->field() != c.space.field()) {
      fail(ErrorKind::ShapeMismatch, "comultiplication tensor does not match the space");
    }
  }
  ValidationReport rep;
  const Tensor3 costar = c.coleft + c.coright;
  for (int k = 0; k < d; ++k) {
    record(rep, "codendriform-1", {k + 1},
           co_left_then(c.coleft, c.space.alpha, c.coleft, k),
           co_right_then(c.space.alpha, costar, c.coleft, k));
    record(rep, "codendriform-2", {k + 1},
           co_left_then(c.coright, c.space.alpha, c.coleft, k),
           co_right_then(c.space.alpha, c.coleft, c.coright, k));
    record(rep, "codendriform-3", {k + 1},
           co_left_then(costar, c.space.alpha, c.coright, k),
           co_right_then(c.space.alpha, c.coright, c.coright, k));
  }
  check_comultiplicativity(rep, "comultiplicativity(<)", c.space, c.coleft);
  check_comultiplicativity(rep, "comultiplicativity(>)", c.space, c.coright);
  return rep;
}

ValidationReport validate_representation(const HomRepresentation& rep) {
  const int da = rep.base.space.dim;
  const int dm = rep.module_space.dim;
  const Field field = rep.base.space.field();
  if (rep.module_space.field() != field) fail(ErrorKind::ShapeMismatch, "module field differs");
  if (rep.act_left.dim0() != da || rep.act_left.dim1() != dm || rep.act_left.dim2() != dm ||
      rep.act_right.dim0() != dm || rep.act_right.dim1() != da || rep.act_right.dim2() != dm) {
    fail(ErrorKind::ShapeMismatch, "action tensors do not match (A, M)");
  }
  ValidationReport out;
  const Matrix& alpha = rep.base.space.alpha;
  const Matrix& beta = rep.module_space.alpha;
  for (int x = 0; x < da; ++x) {
    const Vec ex = unit(field, da, x);
    const Vec ax = column(alpha, x);
    for (int m = 0; m < dm; ++m) {
      const Vec em = unit(field, dm, m);
      const Vec bm = column(beta, m);
      record(out, "beta(am) = alpha(a)beta(m)", {x + 1, m + 1},
             beta.apply(bilinear(rep.act_left, ex, em)), bilinear(rep.act_left, ax, bm));
      record(out, "beta(ma) = beta(m)alpha(a)", {m + 1, x + 1},
             beta.apply(bilinear(rep.act_right, em, ex)), bilinear(rep.act_right, bm, ax));
      for (int y = 0; y < da; ++y) {
        const Vec ey = unit(field, da, y);
        const Vec ay = column(alpha, y);
        record(out, "(ab)beta(m) = alpha(a)(bm)", {x + 1, y + 1, m + 1},
               bilinear(rep.act_left, bilinear(rep.base.mu, ex, ey), bm),
               bilinear(rep.act_left, ax, bilinear(rep.act_left, ey, em)));
        record(out, "(am)alpha(b) = alpha(a)(mb)", {x + 1, m + 1, y + 1},
               bilinear(rep.act_right, bilinear(rep.act_left, ex, em), ay),
               bilinear(rep.act_left, ax, bilinear(rep.act_right, em, ey)));
        record(out, "(ma)alpha(b) = beta(m)(ab)", {m + 1, x + 1, y + 1},
               bilinear(rep.act_right, bilinear(rep.act_right, em, ex), ay),
               bilinear(rep.act_right, bm, bilinear(rep.base.mu, ex, ey)));
      }
    }
  }
  return out;
}

HomAssocAlgebra induced_assoc(const HomDendAlgebra& a, bool validate) {
  if (validate) require_valid(validate_hom_dend(a), "hom-dendriform algebra");
  return HomAssocAlgebra{a.space, a.left + a.right};
}

PreLieCheckReport induced_prelie(const HomDendAlgebra& a, bool validate) {
  if (validate) require_valid(validate_hom_dend(a), "hom-dendriform algebra");
  const int d = a.space.dim;
  const Field field = a.space.field();
  Tensor3 diamond = Tensor3::cube(field, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        diamond.at(i, j, k) = a.right.at(i, j, k) - a.left.at(j, i, k);
      }
    }
  }
  PreLieCheckReport out{diamond, {}};
  for (int x = 0; x < d; ++x) {
    const Vec ex = unit(field, d, x);
    const Vec ax = column(a.space.alpha, x);
    for (int y = 0; y < d; ++y) {
      const Vec ey = unit(field, d, y);
      const Vec ay = column(a.space.alpha, y);
      for (int z = 0; z < d; ++z) {
        const Vec ez = unit(field, d, z);
        const Vec az = column(a.space.alpha, z);
        const Vec lhs = vec_sub(bilinear(diamond, bilinear(diamond, ex, ey), az),
                                bilinear(diamond, ax, bilinear(diamond, ey, ez)));
        const Vec rhs = vec_sub(bilinear(diamond, bilinear(diamond, ey, ex), az),
                                bilinear(diamond, ay, bilinear(diamond, ex, ez)));
        record(out.identity, "left hom-preLie identity", {x + 1, y + 1, z + 1}, lhs, rhs);
      }
    }
  }
  return out;
}

BracketPair induced_lie_brackets(const HomDendAlgebra& a, bool validate) {
  const PreLieCheckReport pre = induced_prelie(a, validate);
  const Tensor3 star = a.left + a.right;
  const int d = a.space.dim;
  Tensor3 b1 = Tensor3::cube(a.space.field(), d);
  Tensor3 b2 = Tensor3::cube(a.space.field(), d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        b1.at(i, j, k) = star.at(i, j, k) - star.at(j, i, k);
        b2.at(i, j, k) = pre.diamond.at(i, j, k) - pre.diamond.at(j, i, k);
      }
    }
  }
  const bool equal = b1 == b2;
  return BracketPair{std::move(b1), std::move(b2), equal};
}

ValidationReport check_rota_baxter(const HomAssocAlgebra& a, const Matrix& r) {
  const int d = a.space.dim;
  const Field field = a.space.field();
  if (r.rows() != d || r.cols() != d || r.field() != field) {
    fail(ErrorKind::ShapeMismatch, "operator must be a square matrix on A");
  }
  ValidationReport rep;
  const Matrix ar = a.space.alpha * r;
  const Matrix ra = r * a.space.alpha;
  for (int i = 0; i < d; ++i) {
    record(rep, "alpha R = R alpha", {i + 1}, column(ar, i), column(ra, i));
  }
  for (int x = 0; x < d; ++x) {
    const Vec ex = unit(field, d, x);
    const Vec rx = column(r, x);
    for (int y = 0; y < d; ++y) {
      const Vec ey = unit(field, d, y);
      const Vec ry = column(r, y);
      const Vec lhs = bilinear(a.mu, rx, ry);
      const Vec rhs = r.apply(vec_add(bilinear(a.mu, ex, ry), bilinear(a.mu, rx, ey)));
      record(rep, "R(a)R(b) = R(aR(b) + R(a)b)", {x + 1, y + 1}, lhs, rhs);
    }
  }
  return rep;
}

HomDendAlgebra from_rota_baxter(const HomAssocAlgebra& a, const Matrix& r) {
  ValidationReport rep = check_rota_baxter(a, r);
  if (!rep.ok()) fail(ErrorKind::NotRotaBaxter, rep.describe());
  const int d = a.space.dim;
  const Field field = a.space.field();
  Tensor3 left = Tensor3::cube(field, d);
  Tensor3 right = Tensor3::cube(field, d);
  for (int i = 0; i < d; ++i) {
    const Vec ei = unit(field, d, i);
    const Vec ri = column(r, i);
    for (int j = 0; j < d; ++j) {
      const Vec lv = bilinear(a.mu, ei, column(r, j));
      const Vec rv = bilinear(a.mu, ri, unit(field, d, j));
      for (int k = 0; k < d; ++k) {
        left.at(i, j, k) = lv[k];
        right.at(i, j, k) = rv[k];
      }
    }
  }
  return HomDendAlgebra{a.space, std::move(left), std::move(right)};
}

ValidationReport check_o_operator(const HomRepresentation& rep, const Matrix& r) {
  const int da = rep.base.space.dim;
  const int dm = rep.module_space.dim;
  const Field field = rep.base.space.field();
  if (r.rows() != da || r.cols() != dm || r.field() != field) {
    fail(ErrorKind::ShapeMismatch, "operator must map M into A");
  }
  ValidationReport out;
  const Matrix ar = rep.base.space.alpha * r;
  const Matrix rb = r * rep.module_space.alpha;
  for (int i = 0; i < dm; ++i) {
    record(out, "alpha R = R beta", {i + 1}, column(ar, i), column(rb, i));
  }
  for (int m = 0; m < dm; ++m) {
    const Vec em = unit(field, dm, m);
    const Vec rm = column(r, m);
    for (int n = 0; n < dm; ++n) {
      const Vec en = unit(field, dm, n);
      const Vec rn = column(r, n);
      const Vec lhs = bilinear(rep.base.mu, rm, rn);
      const Vec inner = vec_add(bilinear(rep.act_right, em, rn), bilinear(rep.act_left, rm, en));
      record(out, "R(m)R(n) = R(mR(n) + R(m)n)", {m + 1, n + 1}, lhs, r.apply(inner));
    }
  }
  return out;
}

HomDendAlgebra from_o_operator(const HomRepresentation& rep, const Matrix& r) {
  ValidationReport check = check_o_operator(rep, r);
  if (!check.ok()) fail(ErrorKind::NotOOperator, check.describe());
  const int dm = rep.module_space.dim;
  const Field field = rep.base.space.field();
  Tensor3 left = Tensor3::cube(field, dm);
  Tensor3 right = Tensor3::cube(field, dm);
  for (int m = 0; m < dm; ++m) {
    const Vec em = unit(field, dm, m);
    const Vec rm = column(r, m);
    for (int n = 0; n < dm; ++n) {
      const Vec lv = bilinear(rep.act_right, em, column(r, n));
      const Vec rv = bilinear(rep.act_left, rm, unit(field, dm, n));
      for (int k = 0; k < dm; ++k) {
        left.at(m, n, k) = lv[k];
        right.at(m, n, k) = rv[k];
      }
    }
  }
  return HomDendAlgebra{rep.module_space, std::move(left), std::move(right)};
}

namespace {

Tensor3 transpose_product(const Tensor3& t) {
  Tensor3 out(t.field(), t.dim2(), t.dim0(), t.dim1());
  for (int i = 0; i < t.dim0(); ++i) {
    for (int j = 0; j < t.dim1(); ++j) {
      for (int k = 0; k < t.dim2(); ++k) out.at(k, i, j) = t.at(i, j, k);
    }
  }
  return out;
}

Tensor3 transpose_coproduct(const Tensor3& t) {
  Tensor3 out(t.field(), t.dim1(), t.dim2(), t.dim0());
  for (int k = 0; k < t.dim0(); ++k) {
    for (int i = 0; i < t.dim1(); ++i) {
      for (int j = 0; j < t.dim2(); ++j) out.at(i, j, k) = t.at(k, i, j);
    }
  }
  return out;
}

}  // namespace

HomDendCoalgebra dualize(const HomDendAlgebra& a, bool validate) {
  if (validate) require_valid(validate_hom_dend(a), "hom-dendriform algebra");
  HomVectorSpace dual(a.space.dim, a.space.alpha.transpose());
  return HomDendCoalgebra{dual, transpose_product(a.left), transpose_product(a.right)};
}

HomDendAlgebra dualize(const HomDendCoalgebra& c, bool validate) {
  if (validate) require_valid(validate_hom_dend_coalg(c), "hom-dendriform coalgebra");
  HomVectorSpace dual(c.space.dim, c.space.alpha.transpose());
  return HomDendAlgebra{dual, transpose_coproduct(c.coleft), transpose_coproduct(c.coright)};
}

HomAssocCoalgebra dualize(const HomAssocAlgebra& a, bool validate) {
  if (validate) require_valid(validate_hom_assoc(a), "hom-associative algebra");
  HomVectorSpace dual(a.space.dim, a.space.alpha.transpose());
  return HomAssocCoalgebra{dual, transpose_product(a.mu)};
}

HomAssocAlgebra dualize(const HomAssocCoalgebra& c, bool validate) {
  if (validate) require_valid(validate_hom_assoc_coalg(c), "hom-associative coalgebra");
  HomVectorSpace dual(c.space.dim, c.space.alpha.transpose());
  return HomAssocAlgebra{dual, transpose_coproduct(c.cop)};
}

}  // namespace homdend
