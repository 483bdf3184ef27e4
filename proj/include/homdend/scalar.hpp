#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

#include "homdend/error.hpp"

namespace homdend {

/// Ground field tag: the rationals or a prime field GF(p).
/// Equality of tags is required for any mixed-operand arithmetic.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);  // throws NonPrimeModulus

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }

  bool operator==(const Field& other) const { return p_ == other.p_; }
  bool operator!=(const Field& other) const { return p_ != other.p_; }

  std::string name() const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 means Q
};

/// Immutable exact scalar: a reduced rational (positive denominator) or a
/// GF(p) residue in [0, p). All arithmetic is exact; mismatched fields throw.
class Scalar {
 public:
  Scalar() : Scalar(Field::rationals(), 0) {}
  Scalar(Field field, long value);
  static Scalar zero(Field field) { return Scalar(field, 0); }
  static Scalar one(Field field) { return Scalar(field, 1); }
  static Scalar rational(long num, long den);
  /// Parses the serialized forms "n", "n/d" and "k mod p".
  static Scalar parse(Field field, const std::string& text);

  Scalar(const Scalar& other);
  Scalar(Scalar&& other) noexcept;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&& other) noexcept;
  ~Scalar();

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZero

  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  /// "n" or "n/d" over Q; "k mod p" over GF(p). Round-trips bit-exactly.
  std::string str() const;

  /// Image of a rational under the reduction map into GF(p); the denominator
  /// must be invertible mod p.
  Scalar reduced_mod(Field prime_field) const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  mpq_t rat_;             // canonical: reduced, positive denominator
  std::uint64_t res_ = 0; // GF(p) residue
};

}  // namespace homdend
