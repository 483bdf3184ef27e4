#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homdend/random.hpp"
#include "homdend/scalar.hpp"

using namespace homdend;

TEST_CASE("rational arithmetic is exact and canonical") {
  const Scalar half = Scalar::rational(1, 2);
  const Scalar third = Scalar::rational(1, 3);
  CHECK((half + third).str() == "5/6");

  // canonicalization: 2/4 reduces to 1/2 and equality is structural
  const Scalar twoFourths = Scalar::rational(2, 4);
  CHECK(twoFourths == half);
  CHECK(twoFourths.str() == "1/2");

  // negative denominators normalize away
  CHECK(Scalar::rational(3, -6).str() == "-1/2");
  CHECK(Scalar::rational(-3, -6).str() == "1/2");
}

TEST_CASE("prime field arithmetic") {
  const Field gf7 = Field::prime(7);
  CHECK(Scalar(gf7, 3).inverse() == Scalar(gf7, 5));  // 3*5 = 15 = 1 mod 7
  CHECK((Scalar(gf7, 6) + Scalar(gf7, 3)) == Scalar(gf7, 2));
  CHECK((-Scalar(gf7, 2)) == Scalar(gf7, 5));
  CHECK(Scalar(gf7, -1) == Scalar(gf7, 6));

  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_NOTHROW(Field::prime(101));
}

TEST_CASE("errors: division by zero and field mismatch") {
  const Scalar q = Scalar::rational(1, 2);
  CHECK_THROWS_AS(q / Scalar::zero(Field::rationals()), Error);
  CHECK_THROWS_AS(Scalar::zero(Field::rationals()).inverse(), Error);
  CHECK_THROWS_AS(q + Scalar(Field::prime(7), 1), Error);
  try {
    q + Scalar(Field::prime(7), 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("serialization round-trips bit-exactly") {
  const Field gf101 = Field::prime(101);
  CHECK(Scalar::parse(Field::rationals(), "-7/3").str() == "-7/3");
  CHECK(Scalar::parse(gf101, "55 mod 101").str() == "55 mod 101");
  CHECK(Scalar::parse(gf101, "155").str() == "54 mod 101");
  CHECK(Scalar::parse(Field::rationals(), "42").str() == "42");
  CHECK_THROWS_AS(Scalar::parse(Field::rationals(), "1.5"), Error);
  CHECK_THROWS_AS(Scalar::parse(Field::rationals(), ""), Error);
  CHECK_THROWS_AS(Scalar::parse(gf101, "3 mod 7"), Error);

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Field field = rng.chance(50) ? Field::rationals() : gf101;
    const Scalar a = rng.small_scalar(field);
    CHECK(Scalar::parse(field, a.str()) == a);
  }
}

TEST_CASE("field axioms hold exactly on randomized triples") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const Field field = rng.chance(50) ? Field::rationals() : Field::prime(101);
    const Scalar a = rng.small_scalar(field);
    const Scalar b = rng.small_scalar(field);
    const Scalar c = rng.small_scalar(field);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Scalar::zero(field));
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}

TEST_CASE("large values stay exact") {
  Scalar big = Scalar::one(Field::rationals());
  for (int i = 1; i <= 30; ++i) big *= Scalar::rational(i, i + 1);
  // 30!/31! = 1/31
  CHECK(big.str() == "1/31");
}
