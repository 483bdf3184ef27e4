#include "homdend/operad.hpp"

#include <string>

namespace homdend {

const char* flavor_name(Flavor flavor) {
  switch (flavor) {
    case Flavor::Ass: return "ass";
    case Flavor::Dend: return "dend";
    case Flavor::CoAss: return "coass";
    case Flavor::CoDend: return "codend";
  }
  return "?";
}

bool flavor_is_co(Flavor flavor) {
  return flavor == Flavor::CoAss || flavor == Flavor::CoDend;
}

bool flavor_has_labels(Flavor flavor) {
  return flavor == Flavor::Dend || flavor == Flavor::CoDend;
}

std::size_t pow_size(int base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

Cochain::Cochain(Flavor flavor, int degree, int dim, Field field)
    : flavor_(flavor), degree_(degree), dim_(dim), field_(field) {
  if (degree < 1) fail(ErrorKind::OutOfRange, "cochain degree must be >= 1");
  if (dim < 1) fail(ErrorKind::OutOfRange, "cochain dimension must be >= 1");
  coeffs_.assign(label_count() * in_size() * out_size(), Scalar::zero(field_));
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (flavor_ != o.flavor_ || degree_ != o.degree_ || dim_ != o.dim_ || field_ != o.field_) {
    fail(ErrorKind::StructureMismatch, "cochain sum shape");
  }
  Cochain out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

Cochain Cochain::operator-(const Cochain& o) const {
  if (flavor_ != o.flavor_ || degree_ != o.degree_ || dim_ != o.dim_ || field_ != o.field_) {
    fail(ErrorKind::StructureMismatch, "cochain difference shape");
  }
  Cochain out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
  return out;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cochain Cochain::scaled(const Scalar& c) const {
  Cochain out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

bool Cochain::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cochain::operator==(const Cochain& o) const {
  if (flavor_ != o.flavor_ || degree_ != o.degree_ || dim_ != o.dim_ || field_ != o.field_) {
    return false;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return false;
  }
  return true;
}

Cochain Cochain::with_input_slot(int slot, const Matrix& p) const {
  const bool co = flavor_is_co(flavor_);
  const int slots = co ? 1 : degree_;
  if (slot < 0 || slot >= slots) fail(ErrorKind::OutOfRange, "input slot out of range");
  if (p.rows() != dim_ || p.cols() != dim_) fail(ErrorKind::ShapeMismatch, "slot matrix shape");
  if (p.is_identity()) return *this;

  Cochain out(flavor_, degree_, dim_, field_);
  const std::size_t stride = co ? 1 : pow_size(dim_, degree_ - 1 - slot);
  const std::size_t d = static_cast<std::size_t>(dim_);
  for (int l = 0; l < label_count(); ++l) {
    for (std::size_t in = 0; in < in_size(); ++in) {
      const std::size_t b = (in / stride) % d;  // current component at the slot
      const std::size_t base = in - b * stride;
      for (std::size_t o = 0; o < out_size(); ++o) {
        const Scalar& c = at(l, in, o);
        if (c.is_zero()) continue;
        for (std::size_t a = 0; a < d; ++a) {
          const Scalar& w = p.at(static_cast<int>(b), static_cast<int>(a));
          if (!w.is_zero()) out.at(l, base + a * stride, o) += w * c;
        }
      }
    }
  }
  return out;
}

Cochain Cochain::with_output_slot(int slot, const Matrix& p) const {
  const bool co = flavor_is_co(flavor_);
  const int slots = co ? degree_ : 1;
  if (slot < 0 || slot >= slots) fail(ErrorKind::OutOfRange, "output slot out of range");
  if (p.rows() != dim_ || p.cols() != dim_) fail(ErrorKind::ShapeMismatch, "slot matrix shape");
  if (p.is_identity()) return *this;

  Cochain out(flavor_, degree_, dim_, field_);
  const std::size_t stride = co ? pow_size(dim_, degree_ - 1 - slot) : 1;
  const std::size_t d = static_cast<std::size_t>(dim_);
  for (int l = 0; l < label_count(); ++l) {
    for (std::size_t in = 0; in < in_size(); ++in) {
      for (std::size_t o = 0; o < out_size(); ++o) {
        const Scalar& c = at(l, in, o);
        if (c.is_zero()) continue;
        const std::size_t b = (o / stride) % d;
        const std::size_t base = o - b * stride;
        for (std::size_t a = 0; a < d; ++a) {
          const Scalar& w = p.at(static_cast<int>(a), static_cast<int>(b));
          if (!w.is_zero()) out.at(l, in, base + a * stride) += w * c;
        }
      }
    }
  }
  return out;
}

TwistedOperad::TwistedOperad(Flavor flavor, Matrix alpha, bool untwisted)
    : flavor_(flavor), dim_(alpha.rows()), field_(alpha.field()),
      alpha_(std::move(alpha)), untwisted_(untwisted) {
  if (alpha_.rows() != alpha_.cols()) fail(ErrorKind::ShapeMismatch, "alpha must be square");
  pow_cache_.push_back(Matrix::identity(field_, dim_));
}

const Matrix& TwistedOperad::alpha_pow(int k) const {
  if (k < 0) fail(ErrorKind::OutOfRange, "negative alpha power");
  if (untwisted_) return pow_cache_[0];
  while (static_cast<int>(pow_cache_.size()) <= k) {
    pow_cache_.push_back(pow_cache_.back() * alpha_);
  }
  return pow_cache_[k];
}

Cochain TwistedOperad::identity_element() const {
  Cochain id = zero(1);
  for (int i = 0; i < dim_; ++i) id.at(0, i, i) = Scalar::one(field_);
  return id;
}

void TwistedOperad::check_cochain(const Cochain& f) const {
  if (f.flavor() != flavor_ || f.dim() != dim_ || f.field() != field_) {
    fail(ErrorKind::StructureMismatch, "cochain does not live over this operad");
  }
}

Cochain TwistedOperad::compose(const Cochain& f, const Cochain& g, int i) const {
  check_cochain(f);
  check_cochain(g);
  const int m = f.degree();
  const int n = g.degree();
  if (i < 1 || i > m) {
    fail(ErrorKind::ArityMismatch,
         "slot " + std::to_string(i) + " outside [1, " + std::to_string(m) + "]");
  }
  const int big = m + n - 1;
  const std::size_t d = static_cast<std::size_t>(dim_);
  const std::size_t mid_size = pow_size(dim_, n);
  const std::size_t post_size = pow_size(dim_, m - i);
  const Matrix& p = alpha_pow(n - 1);
  const bool co = flavor_is_co(flavor_);
  const bool labelled = flavor_has_labels(flavor_);

  // Outer cochain with alpha^{n-1} applied to every slot except slot i.
  Cochain ftw = f;
  for (int t = 0; t < m; ++t) {
    if (t == i - 1) continue;
    ftw = co ? ftw.with_output_slot(t, p) : ftw.with_input_slot(t, p);
  }

  Cochain out = zero(big);
  for (int ro = 0; ro < out.label_count(); ++ro) {
    int s = 0;
    std::vector<int> inner_labels{1};
    if (labelled) {
      s = r0(m, i, n, ro + 1).value - 1;
      inner_labels = ri(m, i, n, ro + 1).labels;
    }
    // Sum of g over the routed inner labels, as a d^n-by-d block (algebra
    // flavors) or d-by-d^n block (co flavors).
    std::vector<Scalar> gsum(mid_size * d, Scalar::zero(field_));
    for (int u : inner_labels) {
      for (std::size_t gi = 0; gi < g.in_size(); ++gi) {
        for (std::size_t go = 0; go < g.out_size(); ++go) {
          const Scalar& c = g.at(u - 1, gi, go);
          if (!c.is_zero()) {
            // flatten as [mid][j] with j the single-d side
            const std::size_t mid = co ? go : gi;
            const std::size_t j = co ? gi : go;
            gsum[mid * d + j] += c;
          }
        }
      }
    }
    if (co) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t fo = 0; fo < ftw.out_size(); ++fo) {
          const Scalar& c = ftw.at(s, k, fo);
          if (c.is_zero()) continue;
          const std::size_t post = fo % post_size;
          const std::size_t rest = fo / post_size;
          const std::size_t j = rest % d;
          const std::size_t pre = rest / d;
          for (std::size_t mid = 0; mid < mid_size; ++mid) {
            const Scalar& w = gsum[mid * d + j];
            if (w.is_zero()) continue;
            const std::size_t target = (pre * mid_size + mid) * post_size + post;
            out.at(ro, k, target) += c * w;
          }
        }
      }
    } else {
      for (std::size_t fi = 0; fi < ftw.in_size(); ++fi) {
        const std::size_t post = fi % post_size;
        const std::size_t rest = fi / post_size;
        const std::size_t j = rest % d;
        const std::size_t pre = rest / d;
        for (std::size_t o = 0; o < d; ++o) {
          const Scalar& c = ftw.at(s, fi, o);
          if (c.is_zero()) continue;
          for (std::size_t mid = 0; mid < mid_size; ++mid) {
            const Scalar& w = gsum[mid * d + j];
            if (w.is_zero()) continue;
            const std::size_t target = (pre * mid_size + mid) * post_size + post;
            out.at(ro, target, o) += c * w;
          }
        }
      }
    }
  }
  return out;
}

// Sign table (the one authority for every exponent in this file):
//   circ:          f • g   = sum_{i=1}^{m} (-1)^{(i-1)(n-1)} f •_i g,  n = deg g
//   bracket:       [f, g]  = f•g - (-1)^{(m-1)(n-1)} g•f,              m = deg f
//   differential:  delta f = (-1)^{n-1} (pi • f) - f • pi,             n = deg f
//     which expands term-by-term to
//       pi •_2 f  +  sum_{i=1}^{n} (-1)^i f •_i pi  +  (-1)^{n+1} pi •_1 f
//   cup:           f ∪ g   = (-1)^{mn} (pi •_2 g) •_1 f

Cochain TwistedOperad::circ(const Cochain& f, const Cochain& g) const {
  const int m = f.degree();
  const int n = g.degree();
  Cochain out = zero(m + n - 1);
  for (int i = 1; i <= m; ++i) {
    const Cochain term = compose(f, g, i);
    out = (((i - 1) * (n - 1)) % 2 == 0) ? out + term : out - term;
  }
  return out;
}

Cochain TwistedOperad::bracket(const Cochain& f, const Cochain& g) const {
  const int m = f.degree();
  const int n = g.degree();
  const Cochain fg = circ(f, g);
  const Cochain gf = circ(g, f);
  return ((m - 1) * (n - 1)) % 2 == 0 ? fg - gf : fg + gf;
}

Cochain TwistedOperad::cup(const Cochain& mult, const Cochain& f, const Cochain& g) const {
  if (mult.degree() != 2) fail(ErrorKind::ArityMismatch, "multiplication must have degree 2");
  const Cochain raw = compose(compose(mult, g, 2), f, 1);
  return (f.degree() * g.degree()) % 2 == 0 ? raw : -raw;
}

Cochain TwistedOperad::differential(const Cochain& mult, const Cochain& f) const {
  if (mult.degree() != 2) fail(ErrorKind::ArityMismatch, "multiplication must have degree 2");
  const int n = f.degree();
  const Cochain left = circ(mult, f);
  const Cochain right = circ(f, mult);
  return (n - 1) % 2 == 0 ? left - right : -left - right;
}

Cochain TwistedOperad::equivariance_defect(const Cochain& f) const {
  check_cochain(f);
  const Matrix& a = alpha_pow(1);
  if (flavor_is_co(flavor_)) {
    Cochain lhs = f;
    for (int t = 0; t < f.degree(); ++t) lhs = lhs.with_output_slot(t, a);
    return lhs - f.with_input_slot(0, a);
  }
  Cochain rhs = f;
  for (int t = 0; t < f.degree(); ++t) rhs = rhs.with_input_slot(t, a);
  return f.with_output_slot(0, a) - rhs;
}

TwistedOperad operad_for(const HomAssocAlgebra& a, bool untwisted) {
  return TwistedOperad(Flavor::Ass, a.space.alpha, untwisted);
}
TwistedOperad operad_for(const HomDendAlgebra& a, bool untwisted) {
  return TwistedOperad(Flavor::Dend, a.space.alpha, untwisted);
}
TwistedOperad operad_for(const HomAssocCoalgebra& c, bool untwisted) {
  return TwistedOperad(Flavor::CoAss, c.space.alpha, untwisted);
}
TwistedOperad operad_for(const HomDendCoalgebra& c, bool untwisted) {
  return TwistedOperad(Flavor::CoDend, c.space.alpha, untwisted);
}

Cochain multiplication_element(const HomAssocAlgebra& a, bool validate) {
  if (validate) require_valid(validate_hom_assoc(a), "hom-associative algebra");
  const int d = a.space.dim;
  Cochain pi(Flavor::Ass, 2, d, a.space.field());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) pi.at(0, i * d + j, k) = a.mu.at(i, j, k);
    }
  }
  return pi;
}

Cochain dend_pair_cochain(const Tensor3& left, const Tensor3& right) {
  const int d = left.dim0();
  Cochain pi(Flavor::Dend, 2, d, left.field());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        pi.at(0, i * d + j, k) = left.at(i, j, k);
        pi.at(1, i * d + j, k) = right.at(i, j, k);
      }
    }
  }
  return pi;
}

Cochain codend_pair_cochain(const Tensor3& coleft, const Tensor3& coright) {
  const int d = coleft.dim0();
  Cochain pi(Flavor::CoDend, 2, d, coleft.field());
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        pi.at(0, k, i * d + j) = coleft.at(k, i, j);
        pi.at(1, k, i * d + j) = coright.at(k, i, j);
      }
    }
  }
  return pi;
}

Cochain multiplication_element(const HomDendAlgebra& a, bool validate) {
  if (validate) require_valid(validate_hom_dend(a), "hom-dendriform algebra");
  return dend_pair_cochain(a.left, a.right);
}

Cochain multiplication_element(const HomAssocCoalgebra& c, bool validate) {
  if (validate) require_valid(validate_hom_assoc_coalg(c), "hom-associative coalgebra");
  const int d = c.space.dim;
  Cochain mult(Flavor::CoAss, 2, d, c.space.field());
  for (int k = 0; k < d; ++k) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) mult.at(0, k, i * d + j) = c.cop.at(k, i, j);
    }
  }
  return mult;
}

Cochain multiplication_element(const HomDendCoalgebra& c, bool validate) {
  if (validate) require_valid(validate_hom_dend_coalg(c), "hom-dendriform coalgebra");
  return codend_pair_cochain(c.coleft, c.coright);
}

Cochain sum_morphism(const Cochain& f) {
  if (!flavor_has_labels(f.flavor())) {
    fail(ErrorKind::StructureMismatch, "sum morphism expects a labelled cochain");
  }
  const Flavor target = f.flavor() == Flavor::Dend ? Flavor::Ass : Flavor::CoAss;
  Cochain out(target, f.degree(), f.dim(), f.field());
  for (int l = 0; l < f.label_count(); ++l) {
    for (std::size_t in = 0; in < f.in_size(); ++in) {
      for (std::size_t o = 0; o < f.out_size(); ++o) {
        const Scalar& c = f.at(l, in, o);
        if (!c.is_zero()) out.at(0, in, o) += c;
      }
    }
  }
  return out;
}

bool is_multiplication(const TwistedOperad& op, const Cochain& mult) {
  if (flavor_is_co(op.flavor())) {
    return op.compose(mult, mult, 1) == op.compose(mult, mult, 2);
  }
  return op.circ(mult, mult).is_zero();
}

}  // namespace homdend
