#include "homdend/scalar.hpp"

#include <cstdlib>

namespace homdend {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotRotaBaxter: return "NotRotaBaxter";
    case ErrorKind::NotOOperator: return "NotOOperator";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NonCommutingComponent: return "NonCommutingComponent";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::DeformationInvalid: return "DeformationInvalid";
    case ErrorKind::AssertionFailure: return "AssertionFailure";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31) || !is_prime_u64(p)) {
    fail(ErrorKind::NonPrimeModulus, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF " + std::to_string(p_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  mpq_init(rat_);
  if (field_.is_rational()) {
    mpq_set_si(rat_, value, 1);
  } else {
    std::int64_t p = static_cast<std::int64_t>(field_.modulus());
    std::int64_t r = static_cast<std::int64_t>(value) % p;
    if (r < 0) r += p;
    res_ = static_cast<std::uint64_t>(r);
  }
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  Scalar s(Field::rationals(), num);
  mpq_set_si(s.rat_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(s.rat_, s.rat_, d);
  mpq_clear(d);
  mpq_canonicalize(s.rat_);
  return s;
}

Scalar Scalar::parse(Field field, const std::string& text) {
  Scalar s(field, 0);
  if (field.is_rational()) {
    if (text.empty() || text.find_first_not_of("-0123456789/") != std::string::npos ||
        mpq_set_str(s.rat_, text.c_str(), 10) != 0) {
      fail(ErrorKind::ParseError, "bad rational literal '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(s.rat_)) == 0) {
      fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    }
    mpq_canonicalize(s.rat_);
    return s;
  }
  // "k" or "k mod p"
  std::string digits = text;
  auto mod_pos = text.find(" mod ");
  if (mod_pos != std::string::npos) {
    std::string mod_part = text.substr(mod_pos + 5);
    if (mod_part != std::to_string(field.modulus())) {
      fail(ErrorKind::ParseError, "modulus in '" + text + "' does not match field " + field.name());
    }
    digits = text.substr(0, mod_pos);
  }
  if (digits.empty() || digits.find_first_not_of("-0123456789") != std::string::npos ||
      (digits[0] == '-' && digits.size() == 1)) {
    fail(ErrorKind::ParseError, "bad residue literal '" + text + "'");
  }
  // reduce a possibly huge decimal modulo p via mpz
  mpz_t z;
  mpz_init(z);
  mpz_set_str(z, digits.c_str(), 10);
  s.res_ = mpz_fdiv_ui(z, field.modulus());
  mpz_clear(z);
  return s;
}

Scalar::Scalar(const Scalar& other) : field_(other.field_), res_(other.res_) {
  mpq_init(rat_);
  mpq_set(rat_, other.rat_);
}

Scalar::Scalar(Scalar&& other) noexcept : field_(other.field_), res_(other.res_) {
  mpq_init(rat_);
  mpq_swap(rat_, other.rat_);
}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this != &other) {
    field_ = other.field_;
    res_ = other.res_;
    mpq_set(rat_, other.rat_);
  }
  return *this;
}

Scalar& Scalar::operator=(Scalar&& other) noexcept {
  if (this != &other) {
    field_ = other.field_;
    res_ = other.res_;
    mpq_swap(rat_, other.rat_);
  }
  return *this;
}

Scalar::~Scalar() { mpq_clear(rat_); }

bool Scalar::is_zero() const {
  return field_.is_rational() ? mpq_sgn(rat_) == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? mpq_cmp_si(rat_, 1, 1) == 0 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    fail(ErrorKind::FieldMismatch,
         "operands live in " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::operator+(const Scalar& other) const {
  check_same_field(other);
  Scalar out(field_, 0);
  if (field_.is_rational()) {
    mpq_add(out.rat_, rat_, other.rat_);
  } else {
    out.res_ = (res_ + other.res_) % field_.modulus();
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& other) const {
  check_same_field(other);
  Scalar out(field_, 0);
  if (field_.is_rational()) {
    mpq_sub(out.rat_, rat_, other.rat_);
  } else {
    out.res_ = (res_ + field_.modulus() - other.res_) % field_.modulus();
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& other) const {
  check_same_field(other);
  Scalar out(field_, 0);
  if (field_.is_rational()) {
    mpq_mul(out.rat_, rat_, other.rat_);
  } else {
    out.res_ = (res_ * other.res_) % field_.modulus();
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(field_, 0);
  if (field_.is_rational()) {
    mpq_neg(out.rat_, rat_);
  } else if (res_ != 0) {
    out.res_ = field_.modulus() - res_;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  Scalar out(field_, 0);
  if (field_.is_rational()) {
    mpq_inv(out.rat_, rat_);
  } else {
    out.res_ = mod_inverse(res_, field_.modulus());
  }
  return out;
}

Scalar Scalar::operator/(const Scalar& other) const {
  check_same_field(other);
  if (other.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (field_.is_rational()) {
    Scalar out(field_, 0);
    mpq_div(out.rat_, rat_, other.rat_);
    return out;
  }
  return *this * other.inverse();
}

bool Scalar::operator==(const Scalar& other) const {
  if (field_ != other.field_) return false;
  return field_.is_rational() ? mpq_equal(rat_, other.rat_) != 0 : res_ == other.res_;
}

std::string Scalar::str() const {
  if (!field_.is_rational()) {
    return std::to_string(res_) + " mod " + std::to_string(field_.modulus());
  }
  char* raw = mpq_get_str(nullptr, 10, rat_);
  std::string out(raw);
  std::free(raw);
  return out;
}

Scalar Scalar::reduced_mod(Field prime_field) const {
  if (prime_field.is_rational() || !field_.is_rational()) {
    fail(ErrorKind::FieldMismatch, "reduction maps Q into a prime field");
  }
  const std::uint64_t p = prime_field.modulus();
  const std::uint64_t den = mpz_fdiv_ui(mpq_denref(rat_), p);
  if (den == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
  Scalar out(prime_field, 0);
  out.res_ = (mpz_fdiv_ui(mpq_numref(rat_), p) * mod_inverse(den, p)) % p;
  return out;
}

}  // namespace homdend
