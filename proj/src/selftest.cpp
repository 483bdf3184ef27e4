#include "homdend/selftest.hpp"

#include <functional>
#include <string>
#include <vector>

#include "homdend/random.hpp"

namespace homdend {

namespace {

struct Suite {
  std::ostream& os;
  bool all_ok = true;
  int passed = 0;
  int total = 0;

  void run(const std::string& name, const std::function<int(Rng&)>& body, std::uint64_t seed) {
    ++total;
    Rng rng(seed);
    try {
      const int checks = body(rng);
      os << name << ": ok (" << checks << " checks)\n";
      ++passed;
    } catch (const Error& e) {
      os << name << ": FAILED (" << e.what() << ")\n";
      all_ok = false;
    }
  }
};

void expect(bool cond, const char* what) {
  if (!cond) fail(ErrorKind::AssertionFailure, what);
}

Field pick_field(Rng& rng) {
  return rng.chance(50) ? Field::rationals() : Field::prime(101);
}

int suite_field_axioms(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const Scalar a = rng.small_scalar(field);
    const Scalar b = rng.small_scalar(field);
    const Scalar c = rng.small_scalar(field);
    expect((a + b) + c == a + (b + c), "addition associativity");
    expect(a * (b + c) == a * b + a * c, "distributivity");
    expect(a + (-a) == Scalar::zero(field), "additive inverse");
    if (!b.is_zero()) expect(b * b.inverse() == Scalar::one(field), "multiplicative inverse");
    expect((a * b) * c == a * (b * c), "multiplication associativity");
    expect(Scalar::parse(field, a.str()) == a, "serialization round-trip");
    checks += 6;
  }
  return checks;
}

int suite_linalg(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int rows = rng.int_in(1, 5);
    const int cols = rng.int_in(1, 5);
    const Matrix m = random_matrix(rng, field, rows, cols, rows * cols / 2 + 1);
    const RrefResult rr = rref(m);
    const SubspaceBasis ker = kernel_basis(m);
    expect(rr.rank + ker.dim() == cols, "rank-nullity");
    expect(rref(rr.matrix).matrix == rr.matrix, "rref idempotent");
    for (const Vec& v : ker.vectors) expect(vec_is_zero(m.apply(v)), "kernel vector annihilated");
    if (ker.dim() > 0) {
      Vec v = zero_vec(field, cols);
      for (int i = 0; i < cols; ++i) v[i] = rng.small_scalar(field);
      const Vec w = ker.vectors[rng.below(ker.dim())];
      const Vec red1 = coset_reduce(ker, v).representative;
      const Vec red2 = coset_reduce(ker, vec_add(v, w)).representative;
      expect(red1 == red2, "coset reduction is coset-invariant");
      ++checks;
    }
    checks += 3;
  }
  return checks;
}

int suite_structures(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int d = rng.int_in(1, 3);
    const HomDendAlgebra a = random_hom_dend(rng, d, field);
    expect(validate_hom_dend(a).ok(), "random dendriform algebra is valid");
    const HomAssocAlgebra star = induced_assoc(a, false);
    expect(validate_hom_assoc(star).ok(), "induced star product is hom-associative");
    expect(induced_prelie(a, false).identity.ok(), "hom-preLie identity");
    expect(induced_lie_brackets(a, false).equal, "two induced brackets agree");
    const HomDendCoalgebra dual = dualize(a, false);
    expect(validate_hom_dend_coalg(dual).ok(), "dual coalgebra is valid");
    expect(dualize(dual, false).left == a.left && dualize(dual, false).right == a.right,
           "dualize is an involution");
    checks += 6;
  }
  return checks;
}

int suite_rota_baxter(Rng& rng, int rounds) {
  int checks = 0;
  int found = 0;
  const auto verify_pair = [&](const HomAssocAlgebra& a, const Matrix& op) {
    const Field field = a.space.field();
    const HomDendAlgebra dend = from_rota_baxter(a, op);
    expect(validate_hom_dend(dend).ok(), "Rota-Baxter splitting is dendriform");
    const HomAssocAlgebra star = induced_assoc(dend, false);
    // star product must be a R(b) + R(a) b
    for (int i = 0; i < a.space.dim; ++i) {
      for (int j = 0; j < a.space.dim; ++j) {
        for (int k = 0; k < a.space.dim; ++k) {
          Scalar want = Scalar::zero(field);
          for (int l = 0; l < a.space.dim; ++l) {
            want += op.at(l, j) * a.mu.at(i, l, k);
            want += op.at(l, i) * a.mu.at(l, j, k);
          }
          expect(star.mu.at(i, j, k) == want, "induced product is a R(b) + R(a) b");
        }
      }
    }
    ++found;
    checks += 2;
  };
  {
    // catalogued pair: e1 e1 = e1, e1 e2 = e2, R(e1) = e2, R(e2) = 0
    const Field field = pick_field(rng);
    Tensor3 mu = Tensor3::cube(field, 2);
    mu.at(0, 0, 0) = Scalar::one(field);
    mu.at(0, 1, 1) = Scalar::one(field);
    const HomAssocAlgebra a{HomVectorSpace(2, Matrix::identity(field, 2)), mu};
    Matrix r(field, 2, 2);
    r.at(1, 0) = Scalar::one(field);
    expect(check_rota_baxter(a, r).ok(), "catalogued operator verifies");
    verify_pair(a, r);
    ++checks;
  }
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const HomAssocAlgebra a = random_hom_assoc(rng, rng.int_in(2, 3), field);
    if (!validate_hom_assoc(a).ok()) fail(ErrorKind::AssertionFailure, "generator invalid");
    for (const Matrix& op : search_rota_baxter(a, rng, 2)) verify_pair(a, op);
  }
  expect(found > 0, "search found at least one operator");
  return checks + 1;
}

int suite_operad_laws(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int d = rng.int_in(1, 2);
    const Flavor flavor =
        std::vector<Flavor>{Flavor::Ass, Flavor::Dend, Flavor::CoAss, Flavor::CoDend}[rng.below(4)];
    // operad elements are the equivariant cochains; the axioms are stated there
    const Matrix alpha = rng.chance(40) ? Matrix::identity(field, d)
                                        : random_matrix(rng, field, d, d, d + 1);
    const TwistedOperad op(flavor, alpha);
    const Complex cx{op, op.zero(2), kDefaultDegreeCap, {}};
    const auto rand_cochain = [&](int degree) {
      return random_equivariant_cochain(cx, degree, rng);
    };
    const int m = rng.int_in(1, 3);
    const int n = rng.int_in(1, 3);
    const int p = rng.int_in(1, 2);
    const Cochain f = rand_cochain(m);
    const Cochain g = rand_cochain(n);
    const Cochain h = rand_cochain(p);
    // unit laws
    expect(op.compose(f, op.identity_element(), rng.int_in(1, m)) == f, "right unit");
    expect(op.compose(op.identity_element(), g, 1) == g, "left unit");
    // sequential axiom
    const int i = rng.int_in(1, m);
    const int j = rng.int_in(1, n);
    expect(op.compose(f, op.compose(g, h, j), i) ==
               op.compose(op.compose(f, g, i), h, i + j - 1),
           "sequential operad axiom");
    // parallel axiom
    if (m >= 2) {
      const int i2 = rng.int_in(1, m - 1);
      const int j2 = rng.int_in(i2 + 1, m);
      expect(op.compose(op.compose(f, g, i2), h, j2 + n - 1) ==
                 op.compose(op.compose(f, h, j2), g, i2),
             "parallel operad axiom");
      ++checks;
    }
    // graded pre-Lie identity
    const Cochain lhs = op.circ(op.circ(f, g), h) - op.circ(f, op.circ(g, h));
    const Cochain rhs = op.circ(op.circ(f, h), g) - op.circ(f, op.circ(h, g));
    expect(lhs == (((n - 1) * (p - 1)) % 2 == 0 ? rhs : -rhs), "graded pre-Lie identity");
    // bracket antisymmetry
    const Cochain bfg = op.bracket(f, g);
    const Cochain bgf = op.bracket(g, f);
    expect(bfg == (((m - 1) * (n - 1)) % 2 == 0 ? -bgf : bgf), "bracket antisymmetry");
    checks += 5;
  }
  return checks;
}

int suite_multiplication_condition(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int d = rng.int_in(1, 3);
    // raw tensors, valid or not
    const Tensor3 left = random_cube(rng, field, d, d * d);
    const Tensor3 right = random_cube(rng, field, d, d * d);
    const Matrix alpha = random_matrix(rng, field, d, d, d + 1);
    const HomVectorSpace space(d, alpha);
    const HomDendAlgebra raw{space, left, right};
    const TwistedOperad op(Flavor::Dend, alpha);
    const Cochain pi = dend_pair_cochain(left, right);
    const Cochain pp = op.circ(pi, pi);
    // three labelled components against the dendriform defect expressions
    const Tensor3 star = left + right;
    bool axioms_hold = true;
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        for (int z = 0; z < d; ++z) {
          Vec ex = zero_vec(field, d), ey = ex, ez = ex;
          ex[x] = Scalar::one(field);
          ey[y] = Scalar::one(field);
          ez[z] = Scalar::one(field);
          const Vec ax = alpha.apply(ex);
          const Vec az = alpha.apply(ez);
          const std::size_t in = static_cast<std::size_t>((x * d + y) * d + z);
          const Vec d1 = vec_sub(bilinear(left, bilinear(left, ex, ey), az),
                                 bilinear(left, ax, bilinear(star, ey, ez)));
          const Vec d2 = vec_sub(bilinear(left, bilinear(right, ex, ey), az),
                                 bilinear(right, ax, bilinear(left, ey, ez)));
          const Vec d3 = vec_sub(bilinear(right, bilinear(star, ex, ey), az),
                                 bilinear(right, ax, bilinear(right, ey, ez)));
          if (!vec_is_zero(d1) || !vec_is_zero(d2) || !vec_is_zero(d3)) axioms_hold = false;
          for (int o = 0; o < d; ++o) {
            expect(pp.at(0, in, o) == d1[o], "pi.pi label 1 matches defect 1");
            expect(pp.at(1, in, o) == d2[o], "pi.pi label 2 matches defect 2");
            expect(pp.at(2, in, o) == d3[o], "pi.pi label 3 matches defect 3");
          }
        }
      }
    }
    expect(pp.is_zero() == axioms_hold, "pi.pi vanishes exactly on dendriform axioms");
    if (validate_hom_dend(raw).ok()) {
      expect(pp.is_zero(), "validator pass forces pi.pi = 0");
      ++checks;
    }
    checks += 3 * d * d * d + 1;
  }
  return checks;
}

int suite_differentials(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int d = rng.int_in(1, 2);
    const int which = rng.below(4);
    Complex cx = [&]() {
      switch (which) {
        case 0: return make_complex(random_hom_assoc(rng, d, field), false, 4, false);
        case 1: return make_complex(random_hom_dend(rng, d, field), false, 4, false);
        case 2: return make_complex(random_hom_assoc_coalg(rng, d, field), false, 4, false);
        default: return make_complex(random_hom_dend_coalg(rng, d, field), false, 4, false);
      }
    }();
    for (int n = 1; n <= 2; ++n) {
      const Cochain f = random_equivariant_cochain(cx, n, rng);
      expect(cx.differential(cx.differential(f)).is_zero(), "delta . delta = 0");
      expect(cx.op.is_equivariant(cx.differential(f)), "differential preserves equivariance");
      checks += 2;
    }
  }
  return checks;
}

int suite_two_route(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int d = rng.int_in(1, 2);
    const int which = rng.below(4);
    const int n = rng.int_in(1, 3);
    if (which == 0) {
      const HomAssocAlgebra a = random_hom_assoc(rng, d, field);
      Complex cx = make_complex(a, false, 4, false);
      const Cochain f = random_equivariant_cochain(cx, n, rng);
      expect(cx.differential(f) == brute_force_differential(a, f), "two-route ass");
    } else if (which == 1) {
      const HomDendAlgebra a = random_hom_dend(rng, d, field);
      Complex cx = make_complex(a, false, 4, false);
      const Cochain f = random_equivariant_cochain(cx, n, rng);
      expect(cx.differential(f) == brute_force_differential(a, f), "two-route dend");
    } else if (which == 2) {
      const HomAssocCoalgebra a = random_hom_assoc_coalg(rng, d, field);
      Complex cx = make_complex(a, false, 4, false);
      const Cochain f = random_equivariant_cochain(cx, n, rng);
      expect(cx.differential(f) == brute_force_differential(a, f), "two-route coass");
    } else {
      const HomDendCoalgebra a = random_hom_dend_coalg(rng, d, field);
      Complex cx = make_complex(a, false, 4, false);
      const Cochain f = random_equivariant_cochain(cx, n, rng);
      expect(cx.differential(f) == brute_force_differential(a, f), "two-route codend");
    }
    ++checks;
  }
  return checks;
}

int suite_chain_map(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int d = rng.int_in(1, 2);
    if (rng.chance(50)) {
      const HomDendAlgebra a = random_hom_dend(rng, d, field);
      Complex dcx = make_complex(a, false, 4, false);
      Complex acx = make_complex(induced_assoc(a, false), false, 4, false);
      expect(sum_morphism(dcx.mult) == acx.mult, "S(pi) is the star multiplication");
      const int n = rng.int_in(1, 3);
      const Cochain f = random_equivariant_cochain(dcx, n, rng);
      expect(sum_morphism(dcx.differential(f)) == acx.differential(sum_morphism(f)),
             "S is a chain map");
      const Cochain g = random_equivariant_cochain(dcx, rng.int_in(1, 2), rng);
      const int i = rng.int_in(1, n);
      expect(sum_morphism(dcx.op.compose(f, g, i)) ==
                 acx.op.compose(sum_morphism(f), sum_morphism(g), i),
             "S preserves partial compositions");
    } else {
      const HomDendCoalgebra a = random_hom_dend_coalg(rng, d, field);
      Complex dcx = make_complex(a, false, 4, false);
      const HomAssocCoalgebra coass{a.space, a.coleft + a.coright};
      Complex acx = make_complex(coass, false, 4, false);
      expect(sum_morphism(dcx.mult) == acx.mult, "Phi(Delta) sums the comultiplications");
      const int n = rng.int_in(1, 3);
      const Cochain f = random_equivariant_cochain(dcx, n, rng);
      expect(sum_morphism(dcx.differential(f)) == acx.differential(sum_morphism(f)),
             "Phi is a chain map");
      const Cochain g = random_equivariant_cochain(dcx, rng.int_in(1, 2), rng);
      const int i = rng.int_in(1, n);
      expect(sum_morphism(dcx.op.compose(f, g, i)) ==
                 acx.op.compose(sum_morphism(f), sum_morphism(g), i),
             "Phi preserves partial compositions");
    }
    checks += 3;
  }
  return checks;
}

int suite_cohomology(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int d = rng.int_in(1, 2);
    const HomDendAlgebra a = random_hom_dend(rng, d, field);
    Complex cx = make_complex(a, false, 4, false);
    const CohomologyReport rep = cohomology_report(cx, 1);
    expect(rep.betti == derivation_space(a, false).dim(), "betti(1) equals derivation space");
    expect(rep.dim_cochains == rep.dim_cocycles + rref(differential_matrix(cx, 1)).rank,
           "rank-nullity of the complex");
    checks += 2;
  }
  return checks;
}

int suite_deformations(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int d = rng.int_in(1, 2);
    Complex cx = rng.chance(50)
                     ? make_complex(random_hom_dend(rng, d, field), false, 4, false)
                     : make_complex(random_hom_dend_coalg(rng, d, field), false, 4, false);
    // gauged trivial deformations trivialize back
    const FormalAutomorphism phi = random_automorphism(cx, 3, rng);
    const TruncatedDeformation gauged = gauge_transform(cx, trivial_deformation(cx, 3), phi);
    expect(check_deformation(cx, gauged).ok(), "gauge preserves the deformation equations");
    const TrivializeResult tr = trivialize(cx, gauged);
    expect(tr.verdict == TrivializeVerdict::Trivial, "gauged trivial deformation is trivial");
    for (int q = 1; q <= 3; ++q) {
      expect(tr.transformed.terms[q].is_zero(), "trivializing gauge restores the structure");
    }
    // infinitesimals and obstruction
    const Cochain z = random_two_cocycle(cx, rng);
    const InfinitesimalClass cls = is_infinitesimal(cx, z);
    expect(cls.is_cocycle, "kernel sample is a 2-cocycle");
    const TruncatedDeformation inf = make_deformation(cx, {z});
    const ObstructionClass obs = obstruction(cx, inf);
    expect(cx.differential(obs.theta).is_zero(), "obstruction is a 3-cocycle");
    const ExtendResult ext = extend(cx, inf);
    if (ext.extended) {
      expect(check_deformation(cx, ext.deformation).ok(), "extension satisfies the equations");
      ++checks;
    }
    checks += 7;
  }
  return checks;
}

int suite_duality(Rng& rng, int rounds) {
  int checks = 0;
  for (int r = 0; r < rounds; ++r) {
    const Field field = pick_field(rng);
    const int d = rng.int_in(1, 2);
    const HomDendCoalgebra c = random_hom_dend_coalg(rng, d, field);
    Complex ccx = make_complex(c, false, 4, false);
    Complex acx = make_complex(dualize(c, false), false, 4, false);
    for (int n = 1; n <= 2; ++n) {
      expect(cohomology_report(ccx, n).betti == cohomology_report(acx, n).betti,
             "coalgebra betti equals dual algebra betti");
      ++checks;
    }
  }
  return checks;
}

}  // namespace

bool run_selftest(std::ostream& os, std::uint64_t seed, bool quick) {
  const int n = quick ? 4 : 12;
  os << "selftest seed=" << seed << (quick ? " (quick)" : "") << "\n";
  Suite suite{os};
  suite.run("field-axioms", [&](Rng& r) { return suite_field_axioms(r, 10 * n); }, seed ^ 0x1);
  suite.run("linalg", [&](Rng& r) { return suite_linalg(r, 4 * n); }, seed ^ 0x2);
  suite.run("structures", [&](Rng& r) { return suite_structures(r, n); }, seed ^ 0x3);
  suite.run("rota-baxter", [&](Rng& r) { return suite_rota_baxter(r, n); }, seed ^ 0x4);
  suite.run("operad-laws", [&](Rng& r) { return suite_operad_laws(r, n); }, seed ^ 0x5);
  suite.run("multiplication-condition",
            [&](Rng& r) { return suite_multiplication_condition(r, n); }, seed ^ 0x6);
  suite.run("differentials", [&](Rng& r) { return suite_differentials(r, n); }, seed ^ 0x7);
  suite.run("two-route-differential", [&](Rng& r) { return suite_two_route(r, 2 * n); },
            seed ^ 0x8);
  suite.run("chain-maps", [&](Rng& r) { return suite_chain_map(r, n); }, seed ^ 0x9);
  suite.run("cohomology", [&](Rng& r) { return suite_cohomology(r, n); }, seed ^ 0xa);
  suite.run("deformations", [&](Rng& r) { return suite_deformations(r, n); }, seed ^ 0xb);
  suite.run("duality", [&](Rng& r) { return suite_duality(r, n); }, seed ^ 0xc);
  os << "selftest: " << suite.passed << "/" << suite.total << " suites passed\n";
  return suite.all_ok;
}

}  // namespace homdend
