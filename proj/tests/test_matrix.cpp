#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homdend/matrix.hpp"
#include "homdend/random.hpp"

using namespace homdend;

namespace {

const Field Q = Field::rationals();

Matrix from_ints(Field field, int rows, int cols, const std::vector<long>& vals) {
  Matrix m(field, rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.at(r, c) = Scalar(field, vals[r * cols + c]);
  }
  return m;
}

Vec from_ints(Field field, const std::vector<long>& vals) {
  Vec v;
  for (long x : vals) v.push_back(Scalar(field, x));
  return v;
}

}  // namespace

TEST_CASE("rref on small fixtures") {
  const Matrix id3 = Matrix::identity(Q, 3);
  const RrefResult r1 = rref(id3);
  CHECK(r1.matrix == id3);
  CHECK(r1.rank == 3);
  CHECK(r1.pivot_cols == std::vector<int>{0, 1, 2});

  const Matrix zero = Matrix(Q, 2, 4);
  const RrefResult r2 = rref(zero);
  CHECK(r2.matrix.is_zero());
  CHECK(r2.rank == 0);
  CHECK(r2.pivot_cols.empty());

  const Matrix m = from_ints(Q, 2, 2, {1, 2, 2, 4});
  const RrefResult r3 = rref(m);
  CHECK(r3.rank == 1);
  CHECK(r3.matrix == from_ints(Q, 2, 2, {1, 2, 0, 0}));
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(Matrix::identity(Q, 4)).dim() == 0);

  const SubspaceBasis full = kernel_basis(Matrix(Q, 3, 5));
  CHECK(full.dim() == 5);

  // kernel of [1 2] spans (-2, 1); canonical form has a leading one
  const Matrix m = from_ints(Q, 1, 2, {1, 2});
  const SubspaceBasis k = kernel_basis(m);
  REQUIRE(k.dim() == 1);
  CHECK(vec_is_zero(m.apply(k.vectors[0])));
  CHECK(k.contains(from_ints(Q, {-2, 1})));
  CHECK(k.vectors[0][0].is_one());
}

TEST_CASE("solve") {
  const Matrix id = Matrix::identity(Q, 3);
  const Vec v = from_ints(Q, {3, -1, 2});
  CHECK(solve(id, v) == v);

  CHECK(!solve(Matrix(Q, 2, 2), from_ints(Q, {1, 0})).has_value());

  const Matrix two = from_ints(Q, 1, 1, {2});
  const auto x = solve(two, from_ints(Q, {3}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar::rational(3, 2));

  CHECK_THROWS_AS(solve(id, from_ints(Q, {1, 2})), Error);
}

TEST_CASE("coset reduction") {
  const SubspaceBasis sub = span_of(Q, 2, {from_ints(Q, {1, 0})});
  const CosetReduction r = coset_reduce(sub, from_ints(Q, {3, 2}));
  CHECK(r.representative == from_ints(Q, {0, 2}));
  CHECK(!r.in_subspace);

  CHECK(coset_reduce(sub, from_ints(Q, {5, 0})).in_subspace);

  const SubspaceBasis empty = span_of(Q, 2, {});
  const CosetReduction r2 = coset_reduce(empty, from_ints(Q, {3, 2}));
  CHECK(r2.representative == from_ints(Q, {3, 2}));
  CHECK(!r2.in_subspace);
  CHECK(coset_reduce(empty, from_ints(Q, {0, 0})).in_subspace);

  CHECK_THROWS_AS(coset_reduce(sub, from_ints(Q, {1, 2, 3})), Error);
}

TEST_CASE("randomized properties: rank-nullity, idempotence, coset invariance") {
  Rng rng(23);
  for (int round = 0; round < 60; ++round) {
    const Field field = rng.chance(50) ? Q : Field::prime(101);
    const int rows = rng.int_in(1, 6);
    const int cols = rng.int_in(1, 6);
    const Matrix m = random_matrix(rng, field, rows, cols, (rows * cols) / 2 + 1);

    const RrefResult r = rref(m);
    const SubspaceBasis ker = kernel_basis(m);
    CHECK(r.rank + ker.dim() == cols);
    CHECK(rref(r.matrix).matrix == r.matrix);
    for (const Vec& v : ker.vectors) CHECK(vec_is_zero(m.apply(v)));

    if (ker.dim() > 0) {
      Vec v = zero_vec(field, cols);
      for (int i = 0; i < cols; ++i) v[i] = rng.small_scalar(field);
      Vec w = zero_vec(field, cols);
      for (const Vec& b : ker.vectors) {
        w = vec_add(w, vec_scale(rng.small_scalar(field), b));
      }
      CHECK(coset_reduce(ker, v).representative ==
            coset_reduce(ker, vec_add(v, w)).representative);
    }

    // solve returns exact solutions; rhs built from a known solution
    Vec x = zero_vec(field, cols);
    for (int i = 0; i < cols; ++i) x[i] = rng.small_scalar(field);
    const auto sol = solve(m, m.apply(x));
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == m.apply(x));
  }
}

TEST_CASE("subspace canonical form is unique per subspace") {
  Rng rng(31);
  for (int round = 0; round < 30; ++round) {
    const Field field = rng.chance(50) ? Q : Field::prime(101);
    const int dim = rng.int_in(1, 5);
    std::vector<Vec> vectors;
    for (int i = 0; i < 3; ++i) {
      Vec v = zero_vec(field, dim);
      for (int j = 0; j < dim; ++j) v[j] = rng.small_scalar(field);
      vectors.push_back(std::move(v));
    }
    const SubspaceBasis a = span_of(field, dim, vectors);
    // same span presented differently: scaled and summed generators
    std::vector<Vec> shuffled;
    shuffled.push_back(vec_scale(Scalar(field, 2), vectors[1]));
    shuffled.push_back(vec_add(vectors[0], vectors[2]));
    shuffled.push_back(vectors[2]);
    shuffled.push_back(vec_add(vectors[0], vectors[1]));
    const SubspaceBasis b = span_of(field, dim, shuffled);
    if (a.dim() == b.dim()) {
      bool all_in = true;
      for (const Vec& v : shuffled) {
        if (!a.contains(v)) all_in = false;
      }
      if (all_in) CHECK(a.vectors == b.vectors);
    }
  }
}
