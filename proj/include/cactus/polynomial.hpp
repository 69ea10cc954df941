#ifndef CACTUS_POLYNOMIAL_HPP
#define CACTUS_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cactus/scalar.hpp"

namespace cactus {

/// Exponents of a monomial, one entry per variable.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& e);

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// go to the larger exponent on the lowest-index variable.
struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Primal polynomials live in the divided-power ring S (x-variables); dual
/// polynomials are operators in the polynomial ring T (y-variables).
enum class Side { primal, dual };

/// Degree reported for the zero polynomial.
inline constexpr int kDegreeOfZero = -1;

/// Sparse multivariate polynomial with exact coefficients.
///
/// Primal terms are divided-power monomials x^[a], so a product of primal
/// polynomials carries binomial factors: x^[a] * x^[b] = C(a+b, a) x^[a+b].
/// Dual polynomials multiply as ordinary polynomials. Zero coefficients are
/// never stored. Iteration over terms is in GrlexGreater order, so the first
/// term is the leading one.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, Scalar, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 1, Side side = Side::primal);

  static Polynomial constant(std::size_t nvars, Side side, const Scalar& c);
  static Polynomial monomial(Side side, ExponentVector exponents, const Scalar& c = Scalar(1));
  /// The variable with 0-based index `var` (x_var or y_var).
  static Polynomial variable(std::size_t nvars, Side side, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  Side side() const { return side_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Max total degree of a term; kDegreeOfZero for the zero polynomial.
  int degree() const;
  /// Min total degree of a term; kDegreeOfZero for the zero polynomial.
  int order() const;
  bool is_homogeneous() const;
  /// True when some term has a positive exponent on `var`.
  bool involves(std::size_t var) const;

  Scalar coefficient(const ExponentVector& e) const;
  const ExponentVector& leading_exponent() const;
  const Scalar& leading_coefficient() const;

  /// Adds c * x^e in place.
  void add_term(const ExponentVector& e, const Scalar& c);
  /// this += c * other.
  void axpy(const Scalar& c, const Polynomial& other);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  /// Divided-power product for primal operands, ordinary product for dual.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Sum of the terms of total degree exactly i.
  Polynomial homogeneous_component(int i) const;
  /// Same terms read on the other side (x <-> y).
  Polynomial with_side(Side side) const;
  /// Same polynomial with `extra` trailing variables appended.
  Polynomial extended(std::size_t extra) const;
  /// Substitutes 0 for every variable with index >= keep and drops them.
  Polynomial restricted(std::size_t keep) const;

  /// Canonical text form, terms in GrlexGreater order. Variables print as
  /// x<i> / y<i> with i counted from `index_base`.
  std::string to_string(int index_base = 1) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_;
  Side side_;
  Terms terms_;
};

/// Binomial coefficient C(n, k) as an exact integer.
mpz_class binomial(long n, long k);

}  // namespace cactus

#endif  // CACTUS_POLYNOMIAL_HPP
