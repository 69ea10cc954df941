#ifndef CACTUS_SCALAR_HPP
#define CACTUS_SCALAR_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace cactus {

/// Element of the coefficient field.
///
/// The default field is Q: values are arbitrary-precision rationals kept in
/// lowest terms with a positive denominator. A nonzero modulus p (prime,
/// p >= 5) switches the scalar to F_p with the value held as an integer in
/// [0, p). Rationals meeting a prime-field scalar are reduced into F_p;
/// two different primes never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class value);

  static Scalar rational(const mpz_class& num, const mpz_class& den);
  /// `value` reduced into F_p. Throws std::invalid_argument unless p is a
  /// prime >= 5.
  static Scalar modular(const mpz_class& value, std::uint32_t p);

  std::uint32_t modulus() const { return modulus_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  /// Same value in F_p (identity if already there).
  Scalar in_field(std::uint32_t p) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void align_with(const Scalar& other);
  void normalize();

  mpq_class value_{0};
  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Checks that `p` is usable as a coefficient characteristic.
bool is_supported_prime(std::uint32_t p);

}  // namespace cactus

#endif  // CACTUS_SCALAR_HPP
