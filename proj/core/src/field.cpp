#include <stdexcept>

#include "locoh/errors.hpp"
#include "locoh/exactla.hpp"

namespace locoh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && !is_prime(p_))
    throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                std::to_string(p_));
}

std::string FieldSpec::name() const {
  return p_ == 0 ? std::string("QQ") : "ZZ/" + std::to_string(p_);
}

namespace {

std::uint32_t reduce_mpz(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar::Scalar(FieldSpec field) : field_(field) {}

Scalar::Scalar(FieldSpec field, long long value) : field_(field) {
  if (field_.is_rational()) {
    rational_ = mpq_class(mpz_class(std::to_string(value)));
  } else {
    const long long p = field_.characteristic();
    long long r = value % p;
    if (r < 0) r += p;
    residue_ = static_cast<std::uint32_t>(r);
  }
}

Scalar Scalar::from_integer(FieldSpec field, const mpz_class& value) {
  Scalar s(field);
  if (field.is_rational())
    s.rational_ = mpq_class(value);
  else
    s.residue_ = reduce_mpz(value, field.characteristic());
  return s;
}

Scalar Scalar::from_rational(FieldSpec field, const mpq_class& value) {
  Scalar s(field);
  if (field.is_rational()) {
    s.rational_ = value;
    s.rational_.canonicalize();
    return s;
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) throw std::domain_error("denominator not invertible in " + field.name());
  const std::uint64_t num = reduce_mpz(value.get_num(), p);
  s.residue_ = static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw FieldMismatchError("scalars over " + field_.name() + " and " + other.field_.name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.rational_ = 1 / rational_;
  else
    s.residue_ = inverse_mod(residue_, field_.characteristic());
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.rational_ = -rational_;
  else
    s.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    rational_ += other.rational_;
  } else {
    const std::uint64_t p = field_.characteristic();
    residue_ = static_cast<std::uint32_t>((std::uint64_t{residue_} + other.residue_) % p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    rational_ *= other.rational_;
  } else {
    const std::uint64_t p = field_.characteristic();
    residue_ = static_cast<std::uint32_t>(std::uint64_t{residue_} * other.residue_ % p);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

}  // namespace locoh
