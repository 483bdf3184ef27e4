#include "homdend/random.hpp"

namespace homdend {

Scalar Rng::small_scalar(Field field, bool nonzero) {
  if (field.is_rational()) {
    for (;;) {
      const int num = int_in(-3, 3);
      if (nonzero && num == 0) continue;
      const int den = chance(25) ? 2 : 1;
      return Scalar::rational(num, den);
    }
  }
  for (;;) {
    const int v = int_in(-3, 3);
    if (nonzero && v == 0) continue;
    return Scalar(field, v);
  }
}

Tensor3 random_cube(Rng& rng, Field field, int dim, int nonzero_entries) {
  Tensor3 t = Tensor3::cube(field, dim);
  for (int n = 0; n < nonzero_entries; ++n) {
    t.at(rng.below(dim), rng.below(dim), rng.below(dim)) = rng.small_scalar(field);
  }
  return t;
}

Matrix random_matrix(Rng& rng, Field field, int rows, int cols, int nonzero_entries) {
  Matrix m(field, rows, cols);
  for (int n = 0; n < nonzero_entries; ++n) {
    m.at(rng.below(rows), rng.below(cols)) = rng.small_scalar(field);
  }
  return m;
}

Matrix random_invertible(Rng& rng, Field field, int dim) {
  Matrix p = Matrix::identity(field, dim);
  if (dim < 2) return p;
  const int transvections = rng.int_in(1, 2);
  for (int t = 0; t < transvections; ++t) {
    const int i = rng.below(dim);
    int j = rng.below(dim);
    if (j == i) j = (j + 1) % dim;
    Matrix e = Matrix::identity(field, dim);
    e.at(i, j) = rng.small_scalar(field, true);
    p = p * e;
  }
  return p;
}

namespace {

Matrix inverse_of(const Matrix& p) {
  const int d = p.rows();
  Matrix inv(p.field(), d, d);
  for (int j = 0; j < d; ++j) {
    Vec e = zero_vec(p.field(), d);
    e[j] = Scalar::one(p.field());
    const auto x = solve(p, e);
    if (!x) fail(ErrorKind::InternalInconsistency, "random basis change is singular");
    for (int i = 0; i < d; ++i) inv.at(i, j) = (*x)[i];
  }
  return inv;
}

Tensor3 change_basis_product(const Tensor3& t, const Matrix& p, const Matrix& pinv) {
  const int d = t.dim0();
  Tensor3 out = Tensor3::cube(t.field(), d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int a = 0; a < d; ++a) {
        const Scalar& pai = p.at(a, i);
        if (pai.is_zero()) continue;
        for (int b = 0; b < d; ++b) {
          const Scalar& pbj = p.at(b, j);
          if (pbj.is_zero()) continue;
          const Scalar w = pai * pbj;
          for (int c = 0; c < d; ++c) {
            const Scalar& tc = t.at(a, b, c);
            if (tc.is_zero()) continue;
            for (int k = 0; k < d; ++k) {
              const Scalar& q = pinv.at(k, c);
              if (!q.is_zero()) out.at(i, j, k) += w * tc * q;
            }
          }
        }
      }
    }
  }
  return out;
}

/// Two-step nilpotent family on V (+) Z with V = first `split` basis vectors:
/// products map V x V into Z, everything touching Z multiplies to zero, and
/// alpha = u id_V + (V -> Z block) + u^2 id_Z. Valid for every choice.
struct NilpotentData {
  Matrix alpha;
  int split;
  Scalar u;
};

NilpotentData nilpotent_alpha(Rng& rng, Field field, int dim) {
  const int split = dim == 1 ? 1 : rng.int_in(1, dim - 1);
  const Scalar u = rng.small_scalar(field);
  Matrix alpha(field, dim, dim);
  for (int i = 0; i < split; ++i) alpha.at(i, i) = u;
  for (int i = split; i < dim; ++i) alpha.at(i, i) = u * u;
  for (int i = split; i < dim; ++i) {
    for (int j = 0; j < split; ++j) {
      if (rng.chance(40)) alpha.at(i, j) = rng.small_scalar(field);
    }
  }
  return {alpha, split, u};
}

Tensor3 nilpotent_cube(Rng& rng, Field field, int dim, int split) {
  Tensor3 t = Tensor3::cube(field, dim);
  for (int i = 0; i < split; ++i) {
    for (int j = 0; j < split; ++j) {
      for (int k = split; k < dim; ++k) {
        if (rng.chance(60)) t.at(i, j, k) = rng.small_scalar(field);
      }
    }
  }
  return t;
}

/// Truncated polynomial algebra K[x]/(x^dim) with the scaling endomorphism
/// x -> lambda x, Yau-twisted so the twisting map is that endomorphism.
HomAssocAlgebra twisted_polynomial_algebra(Rng& rng, Field field, int dim) {
  const Scalar lambda = rng.small_scalar(field, rng.chance(70));
  Matrix alpha(field, dim, dim);
  Scalar pow = Scalar::one(field);
  for (int i = 0; i < dim; ++i) {
    alpha.at(i, i) = pow;
    pow *= lambda;
  }
  Tensor3 mu = Tensor3::cube(field, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const int k = i + j;
      if (k < dim) mu.at(i, j, k) = alpha.at(k, k);  // alpha o (original product)
    }
  }
  return HomAssocAlgebra{HomVectorSpace(dim, alpha), mu};
}

HomAssocAlgebra spec_unital_corner(Field field) {
  // e1 e1 = e1, e1 e2 = e2, other products zero, alpha = id
  Tensor3 mu = Tensor3::cube(field, 2);
  mu.at(0, 0, 0) = Scalar::one(field);
  mu.at(0, 1, 1) = Scalar::one(field);
  return HomAssocAlgebra{HomVectorSpace(2, Matrix::identity(field, 2)), mu};
}

HomAssocAlgebra basis_changed(const HomAssocAlgebra& a, Rng& rng) {
  const Matrix p = random_invertible(rng, a.space.field(), a.space.dim);
  const Matrix pinv = inverse_of(p);
  return HomAssocAlgebra{HomVectorSpace(a.space.dim, pinv * a.space.alpha * p),
                         change_basis_product(a.mu, p, pinv)};
}

HomDendAlgebra basis_changed(const HomDendAlgebra& a, Rng& rng) {
  const Matrix p = random_invertible(rng, a.space.field(), a.space.dim);
  const Matrix pinv = inverse_of(p);
  return HomDendAlgebra{HomVectorSpace(a.space.dim, pinv * a.space.alpha * p),
                        change_basis_product(a.left, p, pinv),
                        change_basis_product(a.right, p, pinv)};
}

}  // namespace

HomAssocAlgebra random_hom_assoc(Rng& rng, int dim, Field field) {
  const int pick = rng.below(10);
  HomAssocAlgebra out = [&]() -> HomAssocAlgebra {
    if (pick < 2) {
      // zero products, arbitrary twisting map
      return HomAssocAlgebra{HomVectorSpace(dim, random_matrix(rng, field, dim, dim, 2 * dim)),
                             Tensor3::cube(field, dim)};
    }
    if (pick < 6 && dim >= 2) {
      const NilpotentData nd = nilpotent_alpha(rng, field, dim);
      return HomAssocAlgebra{HomVectorSpace(dim, nd.alpha),
                             nilpotent_cube(rng, field, dim, nd.split)};
    }
    if (pick < 8 && dim == 2) return spec_unital_corner(field);
    return twisted_polynomial_algebra(rng, field, dim);
  }();
  if (rng.chance(35)) out = basis_changed(out, rng);
  return out;
}

HomDendAlgebra random_hom_dend(Rng& rng, int dim, Field field) {
  const int pick = rng.below(10);
  HomDendAlgebra out = [&]() -> HomDendAlgebra {
    if (pick < 2) {
      return HomDendAlgebra{HomVectorSpace(dim, random_matrix(rng, field, dim, dim, 2 * dim)),
                            Tensor3::cube(field, dim), Tensor3::cube(field, dim)};
    }
    if (pick < 7 && dim >= 2) {
      const NilpotentData nd = nilpotent_alpha(rng, field, dim);
      return HomDendAlgebra{HomVectorSpace(dim, nd.alpha),
                            nilpotent_cube(rng, field, dim, nd.split),
                            nilpotent_cube(rng, field, dim, nd.split)};
    }
    if (dim == 1) {
      // e < e = c e, e > e = 0 with alpha = id (or everything zero)
      Tensor3 left = Tensor3::cube(field, 1);
      if (rng.chance(70)) left.at(0, 0, 0) = rng.small_scalar(field);
      return HomDendAlgebra{HomVectorSpace(1, Matrix::identity(field, 1)), left,
                            Tensor3::cube(field, 1)};
    }
    // Rota-Baxter splitting of a catalogue algebra
    const HomAssocAlgebra base =
        dim == 2 && rng.chance(50) ? spec_unital_corner(field)
                                   : twisted_polynomial_algebra(rng, field, dim);
    const std::vector<Matrix> ops = search_rota_baxter(base, rng, 4);
    if (!ops.empty()) return from_rota_baxter(base, ops[rng.below(static_cast<int>(ops.size()))]);
    return HomDendAlgebra{base.space, Tensor3::cube(field, dim), Tensor3::cube(field, dim)};
  }();
  if (rng.chance(35)) out = basis_changed(out, rng);
  return out;
}

HomAssocCoalgebra random_hom_assoc_coalg(Rng& rng, int dim, Field field) {
  return dualize(random_hom_assoc(rng, dim, field), false);
}

HomDendCoalgebra random_hom_dend_coalg(Rng& rng, int dim, Field field) {
  return dualize(random_hom_dend(rng, dim, field), false);
}

Cochain random_equivariant_cochain(const Complex& cx, int degree, Rng& rng) {
  const CochainBasis& basis = equivariant_basis(cx, degree);
  Cochain out = cx.op.zero(degree);
  for (int i = 0; i < basis.size(); ++i) {
    if (!rng.chance(60)) continue;
    const Scalar c = rng.small_scalar(cx.op.field());
    if (c.is_zero()) continue;
    out = out + basis.decode_ambient(basis.basis.vectors[i]).scaled(c);
  }
  return out;
}

Cochain random_two_cocycle(const Complex& cx, Rng& rng) {
  const Matrix d2 = differential_matrix(cx, 2);
  const SubspaceBasis cocycles = kernel_basis(d2);
  const CochainBasis& basis2 = equivariant_basis(cx, 2);
  Vec coords = zero_vec(cx.op.field(), basis2.size());
  for (const Vec& z : cocycles.vectors) {
    if (!rng.chance(50)) continue;
    const Scalar c = rng.small_scalar(cx.op.field());
    if (c.is_zero()) continue;
    coords = vec_add(coords, vec_scale(c, z));
  }
  return basis2.decode(coords);
}

FormalAutomorphism random_automorphism(const Complex& cx, int order, Rng& rng) {
  FormalAutomorphism phi = identity_automorphism(cx.op.field(), cx.op.dim(), order);
  for (int q = 1; q <= order; ++q) {
    phi.components[q] = endo_matrix(random_equivariant_cochain(cx, 1, rng));
  }
  return phi;
}

std::vector<Matrix> search_rota_baxter(const HomAssocAlgebra& a, Rng& rng, int want) {
  const int d = a.space.dim;
  const Field field = a.space.field();
  std::vector<Matrix> found;
  const auto try_candidate = [&](const Matrix& r) {
    if (r.is_zero()) return;
    if (check_rota_baxter(a, r).ok()) found.push_back(r);
  };
  if (d <= 2) {
    const int cells = d * d;
    int count = 1;
    for (int c = 0; c < cells; ++c) count *= 3;
    for (int mask = 0; mask < count && static_cast<int>(found.size()) < want; ++mask) {
      Matrix r(field, d, d);
      int rest = mask;
      for (int c = 0; c < cells; ++c) {
        const int trit = rest % 3;
        rest /= 3;
        if (trit == 1) r.at(c / d, c % d) = Scalar::one(field);
        if (trit == 2) r.at(c / d, c % d) = -Scalar::one(field);
      }
      try_candidate(r);
    }
    return found;
  }
  for (int attempt = 0; attempt < 600 && static_cast<int>(found.size()) < want; ++attempt) {
    Matrix r(field, d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const int trit = rng.below(3);
        if (trit == 1) r.at(i, j) = Scalar::one(field);
        if (trit == 2) r.at(i, j) = -Scalar::one(field);
      }
    }
    try_candidate(r);
  }
  return found;
}

}  // namespace homdend
