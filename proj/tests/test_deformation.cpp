#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homdend/random.hpp"

using namespace homdend;

namespace {

const Field Q = Field::rationals();

HomDendAlgebra zero_dend(int d) {
  return {HomVectorSpace(d, Matrix::identity(Q, d)), Tensor3::cube(Q, d), Tensor3::cube(Q, d)};
}

HomDendAlgebra rb_dend() {
  Tensor3 mu = Tensor3::cube(Q, 2);
  mu.at(0, 0, 0) = Scalar::one(Q);
  mu.at(0, 1, 1) = Scalar::one(Q);
  const HomAssocAlgebra a{HomVectorSpace(2, Matrix::identity(Q, 2)), mu};
  Matrix r(Q, 2, 2);
  r.at(1, 0) = Scalar::one(Q);
  return from_rota_baxter(a, r);
}

}  // namespace

TEST_CASE("check_deformation") {
  const Complex cx = make_complex(rb_dend());
  // all higher terms zero: valid to every order
  CHECK(check_deformation(cx, trivial_deformation(cx, 4)).ok());

  // order-1 validity is exactly the 2-cocycle condition
  Rng rng(3);
  for (int round = 0; round < 10; ++round) {
    const Cochain z = random_two_cocycle(cx, rng);
    CHECK(check_deformation(cx, make_deformation(cx, {z})).ok());
    CHECK(cx.differential(z).is_zero());
  }
  // a random non-cocycle fails at order 1
  const CochainBasis& basis2 = equivariant_basis(cx, 2);
  for (int i = 0; i < basis2.size(); ++i) {
    const Cochain f = basis2.decode_ambient(basis2.basis.vectors[i]);
    if (cx.differential(f).is_zero()) continue;
    const DeformationCheck check = check_deformation(cx, make_deformation(cx, {f}));
    REQUIRE(!check.ok());
    CHECK(check.failures[0].order == 1);
    break;
  }

  // zero base structure, order 2: the equation is pi1 . pi1 = 0
  const Complex zcx = make_complex(zero_dend(2));
  Rng rng2(5);
  for (int round = 0; round < 10; ++round) {
    const Cochain p1 = random_equivariant_cochain(zcx, 2, rng2);
    const DeformationCheck check =
        check_deformation(zcx, make_deformation(zcx, {p1, zcx.op.zero(2)}));
    CHECK(check.ok() == zcx.op.circ(p1, p1).is_zero());
  }
}

TEST_CASE("infinitesimals and their classes") {
  const Complex cx = make_complex(rb_dend());
  Rng rng(7);

  // coboundaries are cocycles with vanishing class
  const Cochain phi = random_equivariant_cochain(cx, 1, rng);
  const InfinitesimalClass cls = is_infinitesimal(cx, cx.differential(phi));
  CHECK(cls.is_cocycle);
  CHECK(cls.is_coboundary);
  CHECK(vec_is_zero(cls.class_coords));

  // the multiplication element itself is a 2-cocycle
  CHECK(is_infinitesimal(cx, cx.mult).is_cocycle);

  // non-cocycles are rejected
  const CochainBasis& basis2 = equivariant_basis(cx, 2);
  for (int i = 0; i < basis2.size(); ++i) {
    const Cochain f = basis2.decode_ambient(basis2.basis.vectors[i]);
    if (!cx.differential(f).is_zero()) {
      CHECK(!is_infinitesimal(cx, f).is_cocycle);
      break;
    }
  }
}

TEST_CASE("equivalent infinitesimals") {
  for (const bool co : {false, true}) {
    const Complex cx = co ? make_complex(dualize(rb_dend())) : make_complex(rb_dend());
    Rng rng(11);
    const Cochain z = random_two_cocycle(cx, rng);

    // identical cocycles: witness phi1 = 0
    const EquivalenceWitness same = equivalent_infinitesimals(cx, z, z);
    CHECK(same.equivalent);
    CHECK(same.phi1.is_zero());

    // shifting by a coboundary stays equivalent; the witness solves the
    // gauge relation and id + t phi1 carries one deformation to the other
    const Cochain phi = random_equivariant_cochain(cx, 1, rng);
    const Cochain shifted = co ? z + cx.differential(phi) : z - cx.differential(phi);
    const EquivalenceWitness w = equivalent_infinitesimals(cx, z, shifted);
    REQUIRE(w.equivalent);
    FormalAutomorphism gauge = identity_automorphism(cx.op.field(), cx.op.dim(), 1);
    gauge.components[1] = w.phi1;
    const TruncatedDeformation moved =
        gauge_transform(cx, make_deformation(cx, {z}), gauge);
    CHECK(moved.terms[1] == shifted);

    // distinct classes are inequivalent (zero structure: H^2 is everything)
    const Complex zcx = co ? make_complex(dualize(zero_dend(2))) : make_complex(zero_dend(2));
    const CochainBasis& basis2 = equivariant_basis(zcx, 2);
    const Cochain z1 = basis2.decode_ambient(basis2.basis.vectors[0]);
    const Cochain z2 = basis2.decode_ambient(basis2.basis.vectors[1]);
    CHECK(!equivalent_infinitesimals(zcx, z1, z2).equivalent);

    // non-cocycle arguments are rejected
    const CochainBasis& rb2 = equivariant_basis(cx, 2);
    for (int i = 0; i < rb2.size(); ++i) {
      const Cochain f = rb2.decode_ambient(rb2.basis.vectors[i]);
      if (!cx.differential(f).is_zero()) {
        CHECK_THROWS_AS(equivalent_infinitesimals(cx, f, f), Error);
        break;
      }
    }
  }
}

TEST_CASE("gauge transforms") {
  for (const bool co : {false, true}) {
    const Complex cx = co ? make_complex(dualize(rb_dend())) : make_complex(rb_dend());
    Rng rng(13);
    const int order = 3;
    const TruncatedDeformation trivial = trivial_deformation(cx, order);

    // identity gauge fixes everything
    CHECK(gauge_transform(cx, trivial, identity_automorphism(cx.op.field(), cx.op.dim(), order)) ==
          trivial);

    const FormalAutomorphism phi = random_automorphism(cx, order, rng);
    const TruncatedDeformation moved = gauge_transform(cx, trivial, phi);
    CHECK(check_deformation(cx, moved).ok());

    // order-1 effect is subtraction (algebras) or addition (coalgebras) of
    // the coboundary of phi1
    const Cochain phi1 = endo_cochain(cx.op.flavor(), phi.components[1]);
    const Cochain delta = cx.differential(phi1);
    CHECK(moved.terms[1] == (co ? delta : -delta));

    // round trip through the inverse gauge restores the input
    const TruncatedDeformation back = gauge_transform(cx, moved, invert_automorphism(phi));
    CHECK(back == trivial);

    // errors: wrong order, non-commuting component
    CHECK_THROWS_AS(
        gauge_transform(cx, trivial, identity_automorphism(cx.op.field(), cx.op.dim(), 2)), Error);
  }

  // a component that fails to commute with alpha is rejected
  Matrix alpha(Q, 2, 2);
  alpha.at(0, 0) = Scalar::one(Q);
  alpha.at(1, 1) = Scalar(Q, 2);
  const HomDendAlgebra twisted{HomVectorSpace(2, alpha), Tensor3::cube(Q, 2),
                               Tensor3::cube(Q, 2)};
  const Complex tcx = make_complex(twisted);
  FormalAutomorphism bad = identity_automorphism(Q, 2, 1);
  bad.components[1].at(0, 1) = Scalar::one(Q);  // does not commute with diag(1, 2)
  try {
    gauge_transform(tcx, trivial_deformation(tcx, 1), bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCommutingComponent);
  }
}

TEST_CASE("automorphism inversion") {
  Rng rng(17);
  const Complex cx = make_complex(rb_dend());
  // identity inverts to itself
  const FormalAutomorphism id3 = identity_automorphism(Q, 2, 3);
  CHECK(compose(id3, invert_automorphism(id3)).components[1].is_zero());

  // geometric series: (id + t phi)^{-1} has psi_2 = phi^2
  FormalAutomorphism lin = identity_automorphism(Q, 2, 3);
  lin.components[1] = endo_matrix(random_equivariant_cochain(cx, 1, rng));
  const FormalAutomorphism inv = invert_automorphism(lin);
  CHECK(inv.components[1] == Matrix(Q, 2, 2) - lin.components[1]);
  CHECK(inv.components[2] == lin.components[1] * lin.components[1]);

  // composition is the identity series and alpha-commutation is preserved
  const FormalAutomorphism both = compose(lin, inv);
  for (int q = 1; q <= 3; ++q) CHECK(both.components[q].is_zero());
  const Matrix& alpha = cx.op.alpha_pow(1);
  for (int q = 0; q <= 3; ++q) {
    CHECK(alpha * inv.components[q] == inv.components[q] * alpha);
  }
}

TEST_CASE("trivialize") {
  for (const bool co : {false, true}) {
    const Complex cx = co ? make_complex(dualize(rb_dend())) : make_complex(rb_dend());
    Rng rng(19);

    // the trivial deformation is trivially trivial
    const TrivializeResult base = trivialize(cx, trivial_deformation(cx, 3));
    CHECK(base.verdict == TrivializeVerdict::Trivial);
    for (int q = 1; q <= 3; ++q) CHECK(base.gauge.components[q].is_zero());

    // gauge-generated deformations come back with a working gauge
    for (int round = 0; round < 5; ++round) {
      const FormalAutomorphism phi = random_automorphism(cx, 3, rng);
      const TruncatedDeformation moved = gauge_transform(cx, trivial_deformation(cx, 3), phi);
      const TrivializeResult res = trivialize(cx, moved);
      CHECK(res.verdict == TrivializeVerdict::Trivial);
      for (int q = 1; q <= 3; ++q) CHECK(res.transformed.terms[q].is_zero());
      CHECK(gauge_transform(cx, moved, res.gauge) == res.transformed);
    }
  }

  // nontrivial verdict: zero structure, nonzero infinitesimal, H^2 has no
  // coboundaries at all
  const Complex zcx = make_complex(zero_dend(2));
  const CochainBasis& basis2 = equivariant_basis(zcx, 2);
  const Cochain z = basis2.decode_ambient(basis2.basis.vectors[0]);
  const TrivializeResult res =
      trivialize(zcx, make_deformation(zcx, {z, zcx.op.zero(2), zcx.op.zero(2)}));
  CHECK(res.verdict == TrivializeVerdict::Nontrivial);
  CHECK(res.blocking_order == 1);
  CHECK(!vec_is_zero(res.blocking_class));
}

TEST_CASE("obstruction and extension") {
  const Complex cx = make_complex(rb_dend());
  Rng rng(23);

  // order-0 deformation: the obstruction sum is empty
  const ObstructionClass empty = obstruction(cx, trivial_deformation(cx, 0));
  CHECK(empty.theta.is_zero());
  CHECK(empty.vanishes);

  // theta = -pi1 . pi1 is always a 3-cocycle on 2-cocycles
  for (int round = 0; round < 10; ++round) {
    const Cochain z = random_two_cocycle(cx, rng);
    const TruncatedDeformation d = make_deformation(cx, {z});
    const ObstructionClass obs = obstruction(cx, d);
    CHECK(obs.theta == -cx.op.circ(z, z));
    CHECK(cx.differential(obs.theta).is_zero());
    // extension succeeds iff the class vanishes; verify the successful side
    const ExtendResult ext = extend(cx, d);
    CHECK(ext.extended == obs.vanishes);
    if (ext.extended) {
      CHECK(ext.deformation.order == 2);
      CHECK(check_deformation(cx, ext.deformation).ok());
    }
  }

  // zero base: pi1 with pi1 . pi1 = 0 extends by zero
  const Complex zcx = make_complex(zero_dend(2));
  Rng rng2(29);
  for (int round = 0; round < 20; ++round) {
    const Cochain p1 = random_equivariant_cochain(zcx, 2, rng2);
    if (!zcx.op.circ(p1, p1).is_zero()) continue;
    const ExtendResult ext = extend(zcx, make_deformation(zcx, {p1}));
    REQUIRE(ext.extended);
    CHECK(ext.deformation.terms[2].is_zero());
  }

  // gauge-generated deformations extend and stay valid
  for (int round = 0; round < 5; ++round) {
    const FormalAutomorphism phi = random_automorphism(cx, 2, rng);
    const TruncatedDeformation moved = gauge_transform(cx, trivial_deformation(cx, 2), phi);
    const ExtendResult ext = extend(cx, moved);
    REQUIRE(ext.extended);
    CHECK(check_deformation(cx, ext.deformation).ok());
  }

  // invalid deformations are refused
  const CochainBasis& basis2 = equivariant_basis(cx, 2);
  for (int i = 0; i < basis2.size(); ++i) {
    const Cochain f = basis2.decode_ambient(basis2.basis.vectors[i]);
    if (!cx.differential(f).is_zero()) {
      CHECK_THROWS_AS(obstruction(cx, make_deformation(cx, {f})), Error);
      break;
    }
  }
}

TEST_CASE("a concrete obstructed infinitesimal: extension genuinely fails") {
  // d = 2, alpha = id, e1 < e1 = -e2: the 2-cocycle below has a nonzero
  // obstruction class in H^3, so no second-order term exists (either field)
  for (const Field field : {Q, Field::prime(101)}) {
    Tensor3 left = Tensor3::cube(field, 2);
    left.at(0, 0, 1) = -Scalar::one(field);
    const HomDendAlgebra a{HomVectorSpace(2, Matrix::identity(field, 2)), left,
                           Tensor3::cube(field, 2)};
    REQUIRE(validate_hom_dend(a).ok());
    const Complex cx = make_complex(a, false, 4, false);
    Cochain z = cx.op.zero(2);
    z.at(0, 0, 0) = Scalar(field, 3);  // e1 <_1 e1 = 3 e1
    z.at(0, 1, 0) = Scalar(field, 2);  // e1 <_1 e2 = 2 e1
    z.at(0, 2, 0) = Scalar(field, 2);  // e2 <_1 e1 = 2 e1
    z.at(0, 3, 1) = Scalar(field, 2);  // e2 <_1 e2 = 2 e2
    z.at(1, 0, 1) = Scalar(field, 3);  // e1 >_1 e1 = 3 e2
    REQUIRE(cx.differential(z).is_zero());
    const TruncatedDeformation d = make_deformation(cx, {z});
    const ObstructionClass obs = obstruction(cx, d);
    CHECK(cx.differential(obs.theta).is_zero());
    CHECK(!obs.vanishes);
    const ExtendResult ext = extend(cx, d);
    CHECK(!ext.extended);
    CHECK(!ext.obstructionClass.vanishes);
    // and the blocking infinitesimal is itself a nontrivial class
    CHECK(!is_infinitesimal(cx, z).is_coboundary);
  }
}

TEST_CASE("vanishing H^2 and H^3: rigidity and unconditional extension") {
  // d = 1, e < e = e, alpha = id has H^1 = H^2 = H^3 = 0
  Tensor3 left = Tensor3::cube(Q, 1);
  left.at(0, 0, 0) = Scalar::one(Q);
  const HomDendAlgebra line{HomVectorSpace(1, Matrix::identity(Q, 1)), left,
                            Tensor3::cube(Q, 1)};
  for (const bool co : {false, true}) {
    const Complex cx = co ? make_complex(dualize(line)) : make_complex(line);
    CHECK(cohomology_report(cx, 2).betti == 0);
    CHECK(cohomology_report(cx, 3).betti == 0);

    // any 2-cocycle seeds a deformation that extends order by order (H^3 = 0)
    const SubspaceBasis cocycles = kernel_basis(differential_matrix(cx, 2));
    REQUIRE(cocycles.dim() >= 1);
    const Cochain z =
        equivariant_basis(cx, 2).decode(vec_scale(Scalar(Q, 2), cocycles.vectors[0]));
    TruncatedDeformation d = make_deformation(cx, {z});
    REQUIRE(check_deformation(cx, d).ok());
    while (d.order < 3) {
      const ExtendResult ext = extend(cx, d);
      REQUIRE(ext.extended);  // guaranteed by H^3 = 0
      d = ext.deformation;
      CHECK(check_deformation(cx, d).ok());
    }

    // rigidity: H^2 = 0 forces every valid deformation to be trivial
    const TrivializeResult res = trivialize(cx, d);
    CHECK(res.verdict == TrivializeVerdict::Trivial);
    for (int q = 1; q <= 3; ++q) CHECK(res.transformed.terms[q].is_zero());
    CHECK(gauge_transform(cx, d, res.gauge) == res.transformed);
  }
}

TEST_CASE("coalgebra deformation defects transpose to algebra defects") {
  Rng rng(31);
  for (int round = 0; round < 8; ++round) {
    const Field field = rng.chance(50) ? Q : Field::prime(101);
    const HomDendCoalgebra c = random_hom_dend_coalg(rng, rng.int_in(1, 2), field);
    const HomDendAlgebra a = dualize(c, false);
    const Complex ccx = make_complex(c, false, 4, false);
    const Complex acx = make_complex(a, false, 4, false);
    // transport a degree-2 algebra cochain to the coalgebra side
    const Cochain pa = random_equivariant_cochain(acx, 2, rng);
    Cochain pc = ccx.op.zero(2);
    const int d = acx.op.dim();
    for (int l = 0; l < 2; ++l) {
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          for (int k = 0; k < d; ++k) {
            pc.at(l, k, i * d + j) = pa.at(l, i * d + j, k);
          }
        }
      }
    }
    const TruncatedDeformation da = make_deformation(acx, {pa, acx.op.zero(2)});
    const TruncatedDeformation dc = make_deformation(ccx, {pc, ccx.op.zero(2)});
    for (int q = 1; q <= 2; ++q) {
      const Cochain defa = deformation_defect(acx, da, q);
      const Cochain defc = deformation_defect(ccx, dc, q);
      // defect tensors correspond under transposition
      for (int l = 0; l < 3; ++l) {
        for (std::size_t in = 0; in < defa.in_size(); ++in) {
          for (std::size_t out = 0; out < defa.out_size(); ++out) {
            CHECK(defa.at(l, in, out) == defc.at(l, out, in));
          }
        }
      }
    }
  }
}
