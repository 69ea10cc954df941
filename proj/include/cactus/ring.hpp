#ifndef CACTUS_RING_HPP
#define CACTUS_RING_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cactus/polynomial.hpp"

namespace cactus {

/// Malformed polynomial text. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParseOptions {
  /// Index printed for the first variable: 1 gives x1..xn, 0 gives x0..x(n-1).
  int index_base = 1;
  /// 0 for rational coefficients, otherwise a prime >= 5.
  std::uint32_t modulus = 0;
};

/// Reads `term (('+'|'-') term)*` where a term is an optional coefficient
/// `INT('/'INT)?` followed by `*`-separated factors `x<i>('^'INT)?` (or
/// `y<i>` for dual polynomials). Whitespace is ignored and a leading sign is
/// accepted.
Polynomial parse(std::string_view text, std::size_t nvars, Side side, ParseOptions options = {});

/// Contraction psi(f): y^a(x^[b]) = x^[b-a] when b >= a componentwise, else 0.
Polynomial contract(const Polynomial& psi, const Polynomial& f);

/// Sum of the homogeneous components of degree <= d.
Polynomial tail(const Polynomial& f, int d);

/// Invertible linear change of coordinates on S_1.
///
/// New coordinates are z = M x, i.e. z_j = sum_i M(j,i) x_i. Primal
/// polynomials are rewritten by divided-power substitution of x = M^{-1} z;
/// dual polynomials by the contragredient substitution y_i = sum_j M(j,i) w_j,
/// so contraction is preserved.
class ChangeOfBasis {
 public:
  using Matrix = std::vector<std::vector<Scalar>>;

  /// Throws std::invalid_argument if `forward` is not square and invertible.
  explicit ChangeOfBasis(Matrix forward);
  static ChangeOfBasis identity(std::size_t n);

  std::size_t dimension() const { return forward_.size(); }
  const Matrix& forward() const { return forward_; }
  const Matrix& inverse() const { return inverse_; }
  bool is_identity() const;

  /// Primal polynomial in x rewritten in the z coordinates.
  Polynomial to_new(const Polynomial& f) const;
  /// Primal polynomial in z rewritten in the original x coordinates.
  Polynomial to_original(const Polynomial& f) const;
  /// Dual polynomial in y rewritten in the dual w coordinates.
  Polynomial dual_to_new(const Polynomial& psi) const;
  /// Dual polynomial in w rewritten in the original y coordinates.
  Polynomial dual_to_original(const Polynomial& psi) const;

  /// Rows of M rendered as linear forms in the original variables.
  std::vector<std::string> describe(int index_base) const;

 private:
  Matrix forward_;
  Matrix inverse_;
};

/// Divided-power substitution x_i = sum_j a(i,j) z_j.
Polynomial substitute_linear_primal(const Polynomial& f, const ChangeOfBasis::Matrix& a);
/// Ordinary substitution y_i = sum_j a(i,j) w_j.
Polynomial substitute_linear_dual(const Polynomial& psi, const ChangeOfBasis::Matrix& a);

struct Dehomogenized {
  Polynomial f;
  ChangeOfBasis change;
};

/// pi_[l](F): changes coordinates so that l becomes the first variable (the
/// basis is l followed by the unit vectors other than the lowest-index
/// variable occurring in l), then sends that variable to 1. The result has
/// one variable fewer than F.
Dehomogenized dehomogenize(const Polynomial& F, const Polynomial& l);

/// Sends every monomial m of g to x0^[d - deg m] m, adding x0 as the new
/// first variable. Throws std::invalid_argument if d < deg g.
Polynomial homogenize(const Polynomial& g, int d);

/// pi*: sends the first dual variable y0 to 1.
Polynomial dehomogenize_dual(const Polynomial& Psi);
/// Homogenizes a dual polynomial with y0 to degree `d` (default: its degree).
Polynomial homogenize_dual(const Polynomial& psi, int d = kDegreeOfZero);

}  // namespace cactus

#endif  // CACTUS_RING_HPP
