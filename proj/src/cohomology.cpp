#include "homdend/cohomology.hpp"

#include <string>

namespace homdend {

Complex make_complex(const HomAssocAlgebra& a, bool untwisted, int degree_cap, bool validate) {
  return Complex{operad_for(a, untwisted), multiplication_element(a, validate), degree_cap, {}};
}
Complex make_complex(const HomDendAlgebra& a, bool untwisted, int degree_cap, bool validate) {
  return Complex{operad_for(a, untwisted), multiplication_element(a, validate), degree_cap, {}};
}
Complex make_complex(const HomAssocCoalgebra& c, bool untwisted, int degree_cap, bool validate) {
  return Complex{operad_for(c, untwisted), multiplication_element(c, validate), degree_cap, {}};
}
Complex make_complex(const HomDendCoalgebra& c, bool untwisted, int degree_cap, bool validate) {
  return Complex{operad_for(c, untwisted), multiplication_element(c, validate), degree_cap, {}};
}

Cochain CochainBasis::decode_ambient(const Vec& ambient) const {
  if (ambient.size() != ambient_dim) {
    fail(ErrorKind::DimensionMismatch, "ambient coordinate length");
  }
  Cochain f(flavor, degree, dim, field);
  for (std::size_t i = 0; i < ambient.size(); ++i) f.flat(i) = ambient[i];
  return f;
}

Cochain CochainBasis::decode(const Vec& coords) const {
  if (static_cast<int>(coords.size()) != basis.dim()) {
    fail(ErrorKind::DimensionMismatch, "basis coordinate length");
  }
  Vec ambient = zero_vec(field, static_cast<int>(ambient_dim));
  for (int i = 0; i < basis.dim(); ++i) {
    if (coords[i].is_zero()) continue;
    ambient = vec_add(ambient, vec_scale(coords[i], basis.vectors[i]));
  }
  return decode_ambient(ambient);
}

Vec CochainBasis::encode(const Cochain& f) const {
  if (f.size() != ambient_dim || f.degree() != degree || f.flavor() != flavor) {
    fail(ErrorKind::StructureMismatch, "cochain does not match this basis");
  }
  Vec v = zero_vec(field, static_cast<int>(ambient_dim));
  for (std::size_t i = 0; i < ambient_dim; ++i) v[i] = f.flat(i);
  return v;
}

Vec CochainBasis::coordinates(const Cochain& f) const {
  const Vec v = encode(f);
  Vec coords = zero_vec(field, basis.dim());
  Vec residue = v;
  for (int i = 0; i < basis.dim(); ++i) {
    coords[i] = v[basis.pivots[i]];
    if (!coords[i].is_zero()) residue = vec_sub(residue, vec_scale(coords[i], basis.vectors[i]));
  }
  if (!vec_is_zero(residue)) {
    fail(ErrorKind::InternalInconsistency,
         "cochain escapes the equivariant subspace in degree " + std::to_string(degree));
  }
  return coords;
}

namespace {

/// n-fold Kronecker power of alpha: coefficients of alpha^{(x) n} on the
/// flattened multi-index basis.
Matrix kron_power(const Matrix& alpha, int n) {
  Matrix w = Matrix::identity(alpha.field(), 1);
  for (int step = 0; step < n; ++step) {
    const int wr = w.rows();
    Matrix next(alpha.field(), wr * alpha.rows(), wr * alpha.cols());
    for (int i = 0; i < wr; ++i) {
      for (int j = 0; j < w.cols(); ++j) {
        const Scalar& c = w.at(i, j);
        if (c.is_zero()) continue;
        for (int a = 0; a < alpha.rows(); ++a) {
          for (int b = 0; b < alpha.cols(); ++b) {
            const Scalar& e = alpha.at(a, b);
            if (!e.is_zero()) next.at(i * alpha.rows() + a, j * alpha.cols() + b) = c * e;
          }
        }
      }
    }
    w = std::move(next);
  }
  return w;
}

SubspaceBasis full_basis(Field field, std::size_t ambient) {
  SubspaceBasis b;
  b.field = field;
  b.ambient_dim = static_cast<int>(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec v = zero_vec(field, static_cast<int>(ambient));
    v[i] = Scalar::one(field);
    b.vectors.push_back(std::move(v));
    b.pivots.push_back(static_cast<int>(i));
  }
  return b;
}

}  // namespace

const CochainBasis& equivariant_basis(const Complex& cx, int n) {
  if (n < 1) fail(ErrorKind::OutOfRange, "cochain degree must be >= 1");
  if (n > cx.degree_cap) {
    fail(ErrorKind::DegreeCapExceeded,
         "degree " + std::to_string(n) + " exceeds cap " + std::to_string(cx.degree_cap));
  }
  auto it = cx.bases.find(n);
  if (it != cx.bases.end()) return it->second;

  const Flavor flavor = cx.op.flavor();
  const int d = cx.op.dim();
  const Field field = cx.op.field();
  const Cochain probe(flavor, n, d, field);
  CochainBasis out;
  out.flavor = flavor;
  out.degree = n;
  out.dim = d;
  out.field = field;
  out.ambient_dim = probe.size();

  const Matrix& a = cx.op.alpha_pow(1);
  if (a.is_identity()) {
    out.basis = full_basis(field, out.ambient_dim);
    return cx.bases.emplace(n, std::move(out)).first->second;
  }

  // The constraint decouples by label and is the same operator in each label
  // block, so one kernel is computed and replicated with offsets.
  const std::size_t in_sz = probe.in_size();
  const std::size_t out_sz = probe.out_size();
  const int block = static_cast<int>(in_sz * out_sz);
  const Matrix w = kron_power(a, n);  // acts on the d^n side
  Matrix t(field, block, block);
  const bool co = flavor_is_co(flavor);
  for (std::size_t i = 0; i < in_sz; ++i) {
    for (std::size_t o = 0; o < out_sz; ++o) {
      const int row = static_cast<int>(i * out_sz + o);
      if (!co) {
        // (alpha o f)[I][j] - (f o alpha^{(x)n})[I][j]
        for (std::size_t c = 0; c < out_sz; ++c) {
          const Scalar& e = a.at(static_cast<int>(o), static_cast<int>(c));
          if (!e.is_zero()) t.at(row, static_cast<int>(i * out_sz + c)) += e;
        }
        for (std::size_t i2 = 0; i2 < in_sz; ++i2) {
          const Scalar& e = w.at(static_cast<int>(i2), static_cast<int>(i));
          if (!e.is_zero()) t.at(row, static_cast<int>(i2 * out_sz + o)) -= e;
        }
      } else {
        // (alpha^{(x)n} o sigma)[k][O] - (sigma o alpha)[k][O]
        for (std::size_t c = 0; c < out_sz; ++c) {
          const Scalar& e = w.at(static_cast<int>(o), static_cast<int>(c));
          if (!e.is_zero()) t.at(row, static_cast<int>(i * out_sz + c)) += e;
        }
        for (std::size_t i2 = 0; i2 < in_sz; ++i2) {
          const Scalar& e = a.at(static_cast<int>(i2), static_cast<int>(i));
          if (!e.is_zero()) t.at(row, static_cast<int>(i2 * out_sz + o)) -= e;
        }
      }
    }
  }
  const SubspaceBasis block_kernel = kernel_basis(t);
  SubspaceBasis& basis = out.basis;
  basis.field = field;
  basis.ambient_dim = static_cast<int>(out.ambient_dim);
  for (int l = 0; l < probe.label_count(); ++l) {
    const int offset = l * block;
    for (int v = 0; v < block_kernel.dim(); ++v) {
      Vec lifted = zero_vec(field, basis.ambient_dim);
      for (int j = 0; j < block; ++j) lifted[offset + j] = block_kernel.vectors[v][j];
      basis.vectors.push_back(std::move(lifted));
      basis.pivots.push_back(offset + block_kernel.pivots[v]);
    }
  }
  return cx.bases.emplace(n, std::move(out)).first->second;
}

Matrix differential_matrix(const Complex& cx, int n) {
  const CochainBasis& dom = equivariant_basis(cx, n);
  const CochainBasis& cod = equivariant_basis(cx, n + 1);
  Matrix d(cx.op.field(), cod.size(), dom.size());
  for (int j = 0; j < dom.size(); ++j) {
    const Cochain f = dom.decode_ambient(dom.basis.vectors[j]);
    const Vec coords = cod.coordinates(cx.differential(f));
    for (int i = 0; i < cod.size(); ++i) d.at(i, j) = coords[i];
  }
  return d;
}

CohomologyReport cohomology_report(const Complex& cx, int n) {
  const CochainBasis& dom = equivariant_basis(cx, n);
  const Matrix dn = differential_matrix(cx, n);
  const SubspaceBasis cocycles = kernel_basis(dn);

  SubspaceBasis image;
  image.field = cx.op.field();
  image.ambient_dim = dom.size();
  if (n >= 2) {
    const Matrix dprev = differential_matrix(cx, n - 1);
    std::vector<Vec> cols;
    cols.reserve(dprev.cols());
    for (int j = 0; j < dprev.cols(); ++j) {
      Vec col = zero_vec(cx.op.field(), dprev.rows());
      for (int i = 0; i < dprev.rows(); ++i) col[i] = dprev.at(i, j);
      cols.push_back(std::move(col));
    }
    image = span_of(cx.op.field(), dom.size(), cols);
  }

  CohomologyReport report;
  report.flavor = cx.op.flavor();
  report.degree = n;
  report.dim_cochains = dom.size();
  report.dim_cocycles = cocycles.dim();
  report.dim_coboundaries = image.dim();
  report.betti = cocycles.dim() - image.dim();

  std::vector<Vec> reduced;
  for (const Vec& z : cocycles.vectors) {
    CosetReduction r = coset_reduce(image, z);
    if (!r.in_subspace) reduced.push_back(std::move(r.representative));
  }
  SubspaceBasis reps = span_of(cx.op.field(), dom.size(), reduced);
  if (reps.dim() != report.betti) {
    fail(ErrorKind::InternalInconsistency, "representative count does not match betti number");
  }
  for (const Vec& coords : reps.vectors) {
    report.representative_coords.push_back(coords);
    report.representatives.push_back(dom.decode(coords));
  }
  return report;
}

SubspaceBasis derivation_space(const HomDendAlgebra& a, bool validate) {
  if (validate) require_valid(validate_hom_dend(a), "hom-dendriform algebra");
  const int d = a.space.dim;
  const Field field = a.space.field();
  const Matrix& alpha = a.space.alpha;
  const int unknowns = d * d;  // x(r, c) = f[r][c], flattened r*d + c
  const int rows = d * d + 2 * d * d * d;
  Matrix sys(field, rows, unknowns);
  int row = 0;
  // alpha f = f alpha
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k, ++row) {
      for (int j = 0; j < d; ++j) {
        sys.at(row, j * d + k) += alpha.at(i, j);
        sys.at(row, i * d + j) -= alpha.at(j, k);
      }
    }
  }
  // Leibniz rule for both products
  for (const Tensor3* t : {&a.left, &a.right}) {
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        for (int k = 0; k < d; ++k, ++row) {
          for (int j = 0; j < d; ++j) {
            sys.at(row, k * d + j) += t->at(x, y, j);   // f(x o y)
            sys.at(row, j * d + y) -= t->at(x, j, k);   // x o f(y)
            sys.at(row, j * d + x) -= t->at(j, y, k);   // f(x) o y
          }
        }
      }
    }
  }
  return kernel_basis(sys);
}

namespace {

Vec mat_column(const Matrix& m, int i) {
  Vec v = zero_vec(m.field(), m.rows());
  for (int r = 0; r < m.rows(); ++r) v[r] = m.at(r, i);
  return v;
}

Vec unit_vec(Field field, int d, int i) {
  Vec v = zero_vec(field, d);
  v[i] = Scalar::one(field);
  return v;
}

int multi_component(std::size_t flat, int n, int d, int slot) {
  return static_cast<int>((flat / pow_size(d, n - 1 - slot)) % static_cast<std::size_t>(d));
}

/// Coefficient block f([label]; e_I) as a vector over the output index.
Vec out_block(const Cochain& f, int label, std::size_t in) {
  Vec v = zero_vec(f.field(), static_cast<int>(f.out_size()));
  for (std::size_t o = 0; o < f.out_size(); ++o) v[o] = f.at(label, in, o);
  return v;
}

/// Multilinear evaluation of an algebra-flavor cochain on coordinate vectors.
Vec eval_multilinear(const Cochain& f, int label, const std::vector<Vec>& args) {
  const int n = f.degree();
  const int d = f.dim();
  Vec out = zero_vec(f.field(), d);
  const std::size_t total = pow_size(d, n);
  for (std::size_t in = 0; in < total; ++in) {
    Scalar weight = Scalar::one(f.field());
    bool zero = false;
    for (int slot = 0; slot < n && !zero; ++slot) {
      const Scalar& c = args[slot][multi_component(in, n, d, slot)];
      if (c.is_zero()) {
        zero = true;
      } else {
        weight *= c;
      }
    }
    if (zero) continue;
    for (int o = 0; o < d; ++o) {
      const Scalar& c = f.at(label, in, o);
      if (!c.is_zero()) out[o] += weight * c;
    }
  }
  return out;
}

Vec eval_label_sum(const Cochain& f, const std::vector<int>& labels, std::size_t in) {
  Vec v = zero_vec(f.field(), static_cast<int>(f.out_size()));
  for (int u : labels) {
    for (std::size_t o = 0; o < f.out_size(); ++o) v[o] += f.at(u - 1, in, o);
  }
  return v;
}

/// Flat tensor product of coefficient blocks, row-major with the first group
/// most significant (matching the multi-index layout).
Vec tensor_outer(Field field, const std::vector<Vec>& groups) {
  Vec acc{Scalar::one(field)};
  for (const Vec& g : groups) {
    Vec next = zero_vec(field, static_cast<int>(acc.size() * g.size()));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i].is_zero()) continue;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (!g[j].is_zero()) next[i * g.size() + j] = acc[i] * g[j];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

void add_scaled(Vec& target, const Scalar& c, const Vec& v, bool negate) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (negate) {
      target[i] -= c * v[i];
    } else {
      target[i] += c * v[i];
    }
  }
}

std::size_t sub_index(std::size_t flat, int n, int d, int from, int count) {
  // components [from, from+count) of a degree-n multi-index, reflattened
  std::size_t out = 0;
  for (int s = 0; s < count; ++s) {
    out = out * d + static_cast<std::size_t>(multi_component(flat, n, d, from + s));
  }
  return out;
}

}  // namespace

Cochain brute_force_differential(const HomAssocAlgebra& a, const Cochain& f, bool untwisted) {
  if (f.flavor() != Flavor::Ass || f.dim() != a.space.dim) {
    fail(ErrorKind::StructureMismatch, "cochain does not match the algebra");
  }
  const int n = f.degree();
  const int d = f.dim();
  const Field field = f.field();
  const Matrix id = Matrix::identity(field, d);
  Matrix p = id;
  if (!untwisted) {
    for (int k = 0; k < n - 1; ++k) p = p * a.space.alpha;
  }
  const Matrix& a1 = untwisted ? id : a.space.alpha;

  Cochain out(Flavor::Ass, n + 1, d, field);
  const std::size_t total = pow_size(d, n + 1);
  for (std::size_t in = 0; in < total; ++in) {
    Vec acc = zero_vec(field, d);
    const int first = multi_component(in, n + 1, d, 0);
    const int last = multi_component(in, n + 1, d, n);
    // alpha^{n-1}(a_1) . f(a_2, ..., a_{n+1})
    acc = vec_add(acc, bilinear(a.mu, mat_column(p, first),
                                out_block(f, 0, sub_index(in, n + 1, d, 1, n))));
    // sum_i (-1)^i f(alpha a_1, ..., a_i a_{i+1}, ..., alpha a_{n+1})
    for (int i = 1; i <= n; ++i) {
      std::vector<Vec> args;
      args.reserve(n);
      for (int s = 0; s < i - 1; ++s) {
        args.push_back(mat_column(a1, multi_component(in, n + 1, d, s)));
      }
      args.push_back(bilinear(a.mu, unit_vec(field, d, multi_component(in, n + 1, d, i - 1)),
                              unit_vec(field, d, multi_component(in, n + 1, d, i))));
      for (int s = i + 1; s <= n; ++s) {
        args.push_back(mat_column(a1, multi_component(in, n + 1, d, s)));
      }
      const Vec term = eval_multilinear(f, 0, args);
      acc = (i % 2 == 0) ? vec_add(acc, term) : vec_sub(acc, term);
    }
    // (-1)^{n+1} f(a_1, ..., a_n) . alpha^{n-1}(a_{n+1})
    const Vec tail = bilinear(a.mu, out_block(f, 0, sub_index(in, n + 1, d, 0, n)),
                              mat_column(p, last));
    acc = (n % 2 == 0) ? vec_sub(acc, tail) : vec_add(acc, tail);
    for (int o = 0; o < d; ++o) out.at(0, in, o) = acc[o];
  }
  return out;
}

Cochain brute_force_differential(const HomDendAlgebra& a, const Cochain& f, bool untwisted) {
  if (f.flavor() != Flavor::Dend || f.dim() != a.space.dim) {
    fail(ErrorKind::StructureMismatch, "cochain does not match the algebra");
  }
  const int n = f.degree();
  const int d = f.dim();
  const Field field = f.field();
  const Matrix id = Matrix::identity(field, d);
  Matrix p = id;
  if (!untwisted) {
    for (int k = 0; k < n - 1; ++k) p = p * a.space.alpha;
  }
  const Matrix& a1 = untwisted ? id : a.space.alpha;
  const auto product = [&](int label_1based) -> const Tensor3& {
    return label_1based == 1 ? a.left : a.right;
  };

  Cochain out(Flavor::Dend, n + 1, d, field);
  const std::size_t total = pow_size(d, n + 1);
  for (int r = 1; r <= n + 1; ++r) {
    for (std::size_t in = 0; in < total; ++in) {
      Vec acc = zero_vec(field, d);
      const int first = multi_component(in, n + 1, d, 0);
      const int last = multi_component(in, n + 1, d, n);
      // pi(R_0(2;1,n)[r]; alpha^{n-1} a_1, f(R_2(2;1,n)[r]; a_2, ...))
      {
        const int s = r0(2, 2, n, r).value;
        const Vec w = eval_label_sum(f, ri(2, 2, n, r).labels, sub_index(in, n + 1, d, 1, n));
        acc = vec_add(acc, bilinear(product(s), mat_column(p, first), w));
      }
      // middle alternating sum
      for (int i = 1; i <= n; ++i) {
        const int fs = r0(n, i, 2, r).value;
        Vec mid = zero_vec(field, d);
        for (int u : ri(n, i, 2, r).labels) {
          mid = vec_add(mid, bilinear(product(u),
                                      unit_vec(field, d, multi_component(in, n + 1, d, i - 1)),
                                      unit_vec(field, d, multi_component(in, n + 1, d, i))));
        }
        std::vector<Vec> args;
        args.reserve(n);
        for (int s = 0; s < i - 1; ++s) {
          args.push_back(mat_column(a1, multi_component(in, n + 1, d, s)));
        }
        args.push_back(std::move(mid));
        for (int s = i + 1; s <= n; ++s) {
          args.push_back(mat_column(a1, multi_component(in, n + 1, d, s)));
        }
        const Vec term = eval_multilinear(f, fs - 1, args);
        acc = (i % 2 == 0) ? vec_add(acc, term) : vec_sub(acc, term);
      }
      // (-1)^{n+1} pi(R_0(2;n,1)[r]; f(R_1(2;n,1)[r]; a_1, ..., a_n), alpha^{n-1} a_{n+1})
      {
        const int s = r0(2, 1, n, r).value;
        const Vec w = eval_label_sum(f, ri(2, 1, n, r).labels, sub_index(in, n + 1, d, 0, n));
        const Vec tail = bilinear(product(s), w, mat_column(p, last));
        acc = (n % 2 == 0) ? vec_sub(acc, tail) : vec_add(acc, tail);
      }
      for (int o = 0; o < d; ++o) out.at(r - 1, in, o) = acc[o];
    }
  }
  return out;
}

namespace {

/// Shared body for the two co-flavor displayed formulas. The coproduct for a
/// routed label set is the sum of the selected comultiplication cubes.
Cochain co_brute_force(const HomVectorSpace& space,
                       const std::vector<const Tensor3*>& cotensors, bool labelled,
                       const Cochain& f, bool untwisted) {
  const int n = f.degree();
  const int d = f.dim();
  const Field field = f.field();
  const Matrix id = Matrix::identity(field, d);
  Matrix p = id;
  if (!untwisted) {
    for (int k = 0; k < n - 1; ++k) p = p * space.alpha;
  }
  const Matrix& a1 = untwisted ? id : space.alpha;

  const auto sigma_sum = [&](const std::vector<int>& labels, int k) {
    Vec block = zero_vec(field, static_cast<int>(f.out_size()));
    for (int u : labels) {
      for (std::size_t o = 0; o < f.out_size(); ++o) block[o] += f.at(u - 1, k, o);
    }
    return block;
  };

  Cochain out(f.flavor(), n + 1, d, field);
  const int out_labels = labelled ? n + 1 : 1;
  for (int r = 1; r <= out_labels; ++r) {
    for (int k = 0; k < d; ++k) {
      Vec acc = zero_vec(field, static_cast<int>(pow_size(d, n + 1)));
      // (alpha^{n-1} (x) sigma(R_2(2;1,n)[r])) o D(R_0(2;1,n)[r]; e_k)
      {
        const int s = labelled ? r0(2, 2, n, r).value : 1;
        const std::vector<int> fs = labelled ? ri(2, 2, n, r).labels : std::vector<int>{1};
        const Tensor3& t = *cotensors[s - 1];
        for (int i1 = 0; i1 < d; ++i1) {
          for (int j1 = 0; j1 < d; ++j1) {
            const Scalar& c = t.at(k, i1, j1);
            if (c.is_zero()) continue;
            add_scaled(acc, c, tensor_outer(field, {mat_column(p, i1), sigma_sum(fs, j1)}),
                       false);
          }
        }
      }
      // middle alternating sum
      for (int i = 1; i <= n; ++i) {
        const int fs = labelled ? r0(n, i, 2, r).value : 1;
        const std::vector<int> ps = labelled ? ri(n, i, 2, r).labels : std::vector<int>{1};
        Tensor3 mid = Tensor3::cube(field, d);
        for (int u : ps) mid = mid + *cotensors[labelled ? u - 1 : 0];
        for (std::size_t o = 0; o < f.out_size(); ++o) {
          const Scalar& c = f.at(fs - 1, k, o);
          if (c.is_zero()) continue;
          std::vector<Vec> groups;
          groups.reserve(n);
          for (int s = 0; s < i - 1; ++s) {
            groups.push_back(mat_column(a1, multi_component(o, n, d, s)));
          }
          {
            const int comp = multi_component(o, n, d, i - 1);
            Vec block = zero_vec(field, d * d);
            for (int x = 0; x < d; ++x) {
              for (int y = 0; y < d; ++y) block[x * d + y] = mid.at(comp, x, y);
            }
            groups.push_back(std::move(block));
          }
          for (int s = i; s < n; ++s) {
            groups.push_back(mat_column(a1, multi_component(o, n, d, s)));
          }
          add_scaled(acc, c, tensor_outer(field, groups), i % 2 != 0);
        }
      }
      // (-1)^{n+1} (sigma(R_1(2;n,1)[r]) (x) alpha^{n-1}) o D(R_0(2;n,1)[r]; e_k)
      {
        const int s = labelled ? r0(2, 1, n, r).value : 1;
        const std::vector<int> fs = labelled ? ri(2, 1, n, r).labels : std::vector<int>{1};
        const Tensor3& t = *cotensors[s - 1];
        for (int i1 = 0; i1 < d; ++i1) {
          for (int j1 = 0; j1 < d; ++j1) {
            const Scalar& c = t.at(k, i1, j1);
            if (c.is_zero()) continue;
            add_scaled(acc, c, tensor_outer(field, {sigma_sum(fs, i1), mat_column(p, j1)}),
                       n % 2 == 0);
          }
        }
      }
      for (std::size_t o = 0; o < acc.size(); ++o) out.at(r - 1, k, o) = acc[o];
    }
  }
  return out;
}

}  // namespace

Cochain brute_force_differential(const HomAssocCoalgebra& c, const Cochain& f, bool untwisted) {
  if (f.flavor() != Flavor::CoAss || f.dim() != c.space.dim) {
    fail(ErrorKind::StructureMismatch, "cochain does not match the coalgebra");
  }
  return co_brute_force(c.space, {&c.cop}, false, f, untwisted);
}

Cochain brute_force_differential(const HomDendCoalgebra& c, const Cochain& f, bool untwisted) {
  if (f.flavor() != Flavor::CoDend || f.dim() != c.space.dim) {
    fail(ErrorKind::StructureMismatch, "cochain does not match the coalgebra");
  }
  return co_brute_force(c.space, {&c.coleft, &c.coright}, true, f, untwisted);
}

}  // namespace homdend
