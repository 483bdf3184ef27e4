#include "homdend/deformation.hpp"

#include <string>

namespace homdend {

Matrix endo_matrix(const Cochain& f) {
  if (f.degree() != 1) fail(ErrorKind::ArityMismatch, "endomorphism cochain must have degree 1");
  Matrix m(f.field(), f.dim(), f.dim());
  // both flavors store f(e_in) = sum_out coeff e_out; column convention
  for (int i = 0; i < f.dim(); ++i) {
    for (int j = 0; j < f.dim(); ++j) m.at(j, i) = f.at(0, i, j);
  }
  return m;
}

Cochain endo_cochain(Flavor flavor, const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::ShapeMismatch, "endomorphism must be square");
  Cochain f(flavor, 1, m.rows(), m.field());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.rows(); ++j) f.at(0, i, j) = m.at(j, i);
  }
  return f;
}

bool TruncatedDeformation::operator==(const TruncatedDeformation& o) const {
  if (order != o.order || terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i] != o.terms[i]) return false;
  }
  return true;
}

TruncatedDeformation trivial_deformation(const Complex& cx, int order) {
  if (order < 0) fail(ErrorKind::OutOfRange, "order must be >= 0");
  TruncatedDeformation d;
  d.order = order;
  d.terms.reserve(order + 1);
  d.terms.push_back(cx.mult);
  for (int q = 1; q <= order; ++q) d.terms.push_back(cx.op.zero(2));
  return d;
}

TruncatedDeformation make_deformation(const Complex& cx, std::vector<Cochain> higher_terms) {
  TruncatedDeformation d;
  d.order = static_cast<int>(higher_terms.size());
  d.terms.reserve(d.order + 1);
  d.terms.push_back(cx.mult);
  for (auto& t : higher_terms) {
    if (t.degree() != 2 || t.flavor() != cx.op.flavor() || t.dim() != cx.op.dim()) {
      fail(ErrorKind::InvalidInput, "deformation terms must be degree-2 cochains of the complex");
    }
    d.terms.push_back(std::move(t));
  }
  return d;
}

FormalAutomorphism identity_automorphism(Field field, int dim, int order) {
  FormalAutomorphism phi;
  phi.order = order;
  phi.components.push_back(Matrix::identity(field, dim));
  for (int q = 1; q <= order; ++q) phi.components.push_back(Matrix(field, dim, dim));
  return phi;
}

FormalAutomorphism compose(const FormalAutomorphism& outer, const FormalAutomorphism& inner) {
  if (outer.order != inner.order) fail(ErrorKind::OrderMismatch, "automorphism orders differ");
  FormalAutomorphism out;
  out.order = outer.order;
  for (int q = 0; q <= out.order; ++q) {
    Matrix c(outer.components[0].field(), outer.components[0].rows(), outer.components[0].cols());
    for (int i = 0; i <= q; ++i) c = c + outer.components[i] * inner.components[q - i];
    out.components.push_back(std::move(c));
  }
  return out;
}

FormalAutomorphism invert_automorphism(const FormalAutomorphism& phi) {
  if (phi.components.empty() || !phi.components[0].is_identity()) {
    fail(ErrorKind::InvalidInput, "automorphism must start at the identity");
  }
  FormalAutomorphism psi;
  psi.order = phi.order;
  psi.components.push_back(phi.components[0]);
  for (int q = 1; q <= phi.order; ++q) {
    Matrix c(phi.components[0].field(), phi.components[0].rows(), phi.components[0].cols());
    for (int i = 1; i <= q; ++i) c = c - phi.components[i] * psi.components[q - i];
    psi.components.push_back(std::move(c));
  }
  return psi;
}

Cochain deformation_defect(const Complex& cx, const TruncatedDeformation& d, int q) {
  if (q < 0 || q > d.order) fail(ErrorKind::OutOfRange, "defect order outside the truncation");
  Cochain defect = cx.op.zero(3);
  for (int i = 0; i <= q; ++i) {
    defect = defect + cx.op.circ(d.terms[i], d.terms[q - i]);
  }
  return defect;
}

DeformationCheck check_deformation(const Complex& cx, const TruncatedDeformation& d) {
  if (static_cast<int>(d.terms.size()) != d.order + 1) {
    fail(ErrorKind::InvalidInput, "deformation must carry order+1 terms");
  }
  if (d.terms[0] != cx.mult) {
    fail(ErrorKind::InvalidInput, "order-0 term must be the multiplication element");
  }
  DeformationCheck check;
  for (int q = 0; q <= d.order; ++q) {
    Cochain defect = deformation_defect(cx, d, q);
    if (!defect.is_zero()) check.failures.push_back({q, std::move(defect)});
  }
  return check;
}

namespace {

struct ImageData {
  Matrix d1;            // differential matrix C^1 -> C^2
  SubspaceBasis image;  // image of delta^1 inside the degree-2 coordinates
};

ImageData coboundary_data(const Complex& cx) {
  ImageData data{differential_matrix(cx, 1), {}};
  std::vector<Vec> cols;
  cols.reserve(data.d1.cols());
  for (int j = 0; j < data.d1.cols(); ++j) {
    Vec col = zero_vec(cx.op.field(), data.d1.rows());
    for (int i = 0; i < data.d1.rows(); ++i) col[i] = data.d1.at(i, j);
    cols.push_back(std::move(col));
  }
  data.image = span_of(cx.op.field(), data.d1.rows(), cols);
  return data;
}

}  // namespace

InfinitesimalClass is_infinitesimal(const Complex& cx, const Cochain& pi1) {
  InfinitesimalClass out{false, false, {}, cx.op.zero(2)};
  if (!cx.differential(pi1).is_zero()) return out;
  out.is_cocycle = true;
  const CochainBasis& basis2 = equivariant_basis(cx, 2);
  const ImageData data = coboundary_data(cx);
  const CosetReduction red = coset_reduce(data.image, basis2.coordinates(pi1));
  out.is_coboundary = red.in_subspace;
  out.class_coords = red.representative;
  out.representative = basis2.decode(red.representative);
  return out;
}

EquivalenceWitness equivalent_infinitesimals(const Complex& cx, const Cochain& pi1,
                                             const Cochain& pi1_prime) {
  for (const Cochain* f : {&pi1, &pi1_prime}) {
    if (!cx.differential(*f).is_zero()) {
      fail(ErrorKind::NotCocycle, "infinitesimal is not a 2-cocycle");
    }
  }
  const CochainBasis& basis2 = equivariant_basis(cx, 2);
  const Matrix d1 = differential_matrix(cx, 1);
  // the gauge id + t phi1 shifts the infinitesimal by -delta(phi1) for
  // algebras and by +delta(phi1) for coalgebras
  const bool co = flavor_is_co(cx.op.flavor());
  const Vec rhs = basis2.coordinates(co ? pi1_prime - pi1 : pi1 - pi1_prime);
  EquivalenceWitness witness{false, Matrix(cx.op.field(), cx.op.dim(), cx.op.dim())};
  if (auto x = solve(d1, rhs)) {
    witness.equivalent = true;
    witness.phi1 = endo_matrix(equivariant_basis(cx, 1).decode(*x));
  }
  return witness;
}

TruncatedDeformation gauge_transform(const Complex& cx, const TruncatedDeformation& d,
                                     const FormalAutomorphism& phi) {
  if (phi.order != d.order) fail(ErrorKind::OrderMismatch, "gauge and deformation orders differ");
  if (phi.components.empty() || !phi.components[0].is_identity()) {
    fail(ErrorKind::InvalidInput, "gauge must start at the identity");
  }
  const Matrix& alpha = cx.op.alpha_pow(1);
  for (int q = 0; q <= phi.order; ++q) {
    if (alpha * phi.components[q] != phi.components[q] * alpha) {
      fail(ErrorKind::NonCommutingComponent,
           "gauge component " + std::to_string(q) + " does not commute with alpha");
    }
  }
  const FormalAutomorphism psi = invert_automorphism(phi);
  const bool co = flavor_is_co(cx.op.flavor());

  TruncatedDeformation out;
  out.order = d.order;
  for (int q = 0; q <= d.order; ++q) {
    Cochain term = cx.op.zero(2);
    for (int a = 0; a <= q; ++a) {
      for (int b = 0; a + b <= q; ++b) {
        for (int c = 0; a + b + c <= q; ++c) {
          const int e = q - a - b - c;
          if (co) {
            // (Phi_a (x) Phi_b) o Delta_c o Psi_e
            term = term + d.terms[c]
                              .with_input_slot(0, psi.components[e])
                              .with_output_slot(0, phi.components[a])
                              .with_output_slot(1, phi.components[b]);
          } else {
            // Phi_a o pi_b o (Psi_c (x) Psi_e)
            term = term + d.terms[b]
                              .with_input_slot(0, psi.components[c])
                              .with_input_slot(1, psi.components[e])
                              .with_output_slot(0, phi.components[a]);
          }
        }
      }
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

TrivializeResult trivialize(const Complex& cx, const TruncatedDeformation& d) {
  {
    const DeformationCheck check = check_deformation(cx, d);
    if (!check.ok()) {
      fail(ErrorKind::InvalidInput,
           "deformation fails its equations at order " + std::to_string(check.failures[0].order));
    }
  }
  const CochainBasis& basis2 = equivariant_basis(cx, 2);
  const ImageData data = coboundary_data(cx);
  const CochainBasis& basis1 = equivariant_basis(cx, 1);

  TrivializeResult result;
  result.transformed = d;
  result.gauge = identity_automorphism(cx.op.field(), cx.op.dim(), d.order);
  const bool co = flavor_is_co(cx.op.flavor());
  for (int p = 1; p <= d.order; ++p) {
    if (result.transformed.terms[p].is_zero()) continue;
    const Cochain& leading = result.transformed.terms[p];
    if (!cx.differential(leading).is_zero()) {
      fail(ErrorKind::AssertionFailure,
           "leading deformation term at order " + std::to_string(p) + " is not a 2-cocycle");
    }
    // gauging by id + t^p phi_p adds -delta(phi_p) (algebras) or
    // +delta(phi_p) (coalgebras) to the order-p term
    const Vec coords = basis2.coordinates(co ? -leading : leading);
    const auto x = solve(data.d1, coords);
    if (!x) {
      result.verdict = TrivializeVerdict::Nontrivial;
      result.blocking_order = p;
      result.blocking_class = coset_reduce(data.image, coords).representative;
      return result;
    }
    FormalAutomorphism step = identity_automorphism(cx.op.field(), cx.op.dim(), d.order);
    step.components[p] = endo_matrix(basis1.decode(*x));
    result.transformed = gauge_transform(cx, result.transformed, step);
    result.gauge = compose(step, result.gauge);
  }
  result.verdict = TrivializeVerdict::Trivial;
  return result;
}

ObstructionClass obstruction(const Complex& cx, const TruncatedDeformation& d) {
  {
    const DeformationCheck check = check_deformation(cx, d);
    if (!check.ok()) {
      fail(ErrorKind::DeformationInvalid,
           "deformation fails its equations at order " + std::to_string(check.failures[0].order));
    }
  }
  Cochain theta = cx.op.zero(3);
  const int target = d.order + 1;
  for (int i = 1; i <= target - 1; ++i) {
    theta = theta - cx.op.circ(d.terms[i], d.terms[target - i]);
  }
  if (!cx.differential(theta).is_zero()) {
    fail(ErrorKind::InternalInconsistency, "obstruction failed to be a 3-cocycle");
  }
  ObstructionClass out{theta, {}, false};
  const CochainBasis& basis3 = equivariant_basis(cx, 3);
  const Matrix d2 = differential_matrix(cx, 2);
  std::vector<Vec> cols;
  cols.reserve(d2.cols());
  for (int j = 0; j < d2.cols(); ++j) {
    Vec col = zero_vec(cx.op.field(), d2.rows());
    for (int i = 0; i < d2.rows(); ++i) col[i] = d2.at(i, j);
    cols.push_back(std::move(col));
  }
  const SubspaceBasis image = span_of(cx.op.field(), d2.rows(), cols);
  const CosetReduction red = coset_reduce(image, basis3.coordinates(theta));
  out.class_coords = red.representative;
  out.vanishes = red.in_subspace;
  return out;
}

ExtendResult extend(const Complex& cx, const TruncatedDeformation& d) {
  ExtendResult result{false, d, obstruction(cx, d), 0};
  const Matrix d2 = differential_matrix(cx, 2);
  result.solution_space_dim = kernel_basis(d2).dim();
  // delta(pi_{n+1}) = -theta, solved in the equivariant bases
  const CochainBasis& basis3 = equivariant_basis(cx, 3);
  const auto x = solve(d2, basis3.coordinates(-result.obstructionClass.theta));
  if (!x) return result;
  const CochainBasis& basis2 = equivariant_basis(cx, 2);
  result.extended = true;
  result.deformation.order = d.order + 1;
  result.deformation.terms.push_back(basis2.decode(*x));
  return result;
}

}  // namespace homdend
