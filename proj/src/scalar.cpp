#include "cactus/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace cactus {

bool is_supported_prime(std::uint32_t p) {
  if (p < 5) return false;
  for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::modular(const mpz_class& value, std::uint32_t p) {
  if (!is_supported_prime(p))
    throw std::invalid_argument("modulus must be a prime >= 5, got " + std::to_string(p));
  Scalar s;
  s.modulus_ = p;
  s.value_ = mpq_class(value);
  s.normalize();
  return s;
}

Scalar Scalar::in_field(std::uint32_t p) const {
  if (p == modulus_) return *this;
  if (modulus_ != 0) throw std::domain_error("scalars from different prime fields");
  if (!is_supported_prime(p))
    throw std::invalid_argument("modulus must be a prime >= 5, got " + std::to_string(p));
  Scalar s;
  s.modulus_ = p;
  s.value_ = value_;
  s.normalize();
  return s;
}

// Reduces a rational value into [0, p) when a modulus is set.
void Scalar::normalize() {
  if (modulus_ == 0) {
    value_.canonicalize();
    return;
  }
  const mpz_class p(modulus_);
  mpz_class num = value_.get_num() % p;
  mpz_class den = value_.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw std::domain_error("denominator not invertible modulo " + std::to_string(modulus_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  num = (num * inv) % p;
  if (num < 0) num += p;
  value_ = mpq_class(num);
}

void Scalar::align_with(const Scalar& other) {
  if (other.modulus_ == modulus_) return;
  if (modulus_ == 0) {
    *this = in_field(other.modulus_);
    return;
  }
  if (other.modulus_ != 0) throw std::domain_error("scalars from different prime fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  if (modulus_ != 0) r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  align_with(rhs);
  if (rhs.modulus_ == modulus_) {
    value_ += rhs.value_;
  } else {
    value_ += rhs.in_field(modulus_).value_;
  }
  if (modulus_ != 0) normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  align_with(rhs);
  if (rhs.modulus_ == modulus_) {
    value_ *= rhs.value_;
  } else {
    value_ *= rhs.in_field(modulus_).value_;
  }
  if (modulus_ != 0) normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero scalar");
  align_with(rhs);
  const Scalar r = rhs.modulus_ == modulus_ ? rhs : rhs.in_field(modulus_);
  if (modulus_ == 0) {
    value_ /= r.value_;
  } else {
    value_ = mpq_class(value_.get_num(), r.value_.get_num());
    normalize();
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  if (a.modulus_ == 0) return a.in_field(b.modulus_).value_ == b.value_;
  if (b.modulus_ == 0) return b.in_field(a.modulus_).value_ == a.value_;
  return false;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cactus
