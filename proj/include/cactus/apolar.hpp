#ifndef CACTUS_APOLAR_HPP
#define CACTUS_APOLAR_HPP

#include <cstddef>
#include <vector>

#include "cactus/echelon.hpp"
#include "cactus/polynomial.hpp"
#include "cactus/sequences.hpp"

namespace cactus {

/// Diff(f) with its degree and order filtrations.
///
/// Rows are the reduced echelon basis of the space of partials. The order
/// filtration is O_0 = Diff(f) and O_{k+1} = span{y_i(b) : b in O_k}, so O_k
/// holds the partials psi(f) with ord(psi) >= k.
class FilteredSpace {
 public:
  /// Throws std::invalid_argument for f = 0.
  explicit FilteredSpace(const Polynomial& f);

  const Polynomial& polynomial() const { return f_; }
  int socle_degree() const { return d_; }
  std::size_t dimension() const { return rows_.size(); }

  /// Monomials occurring in some row, GrlexGreater order.
  const std::vector<ExponentVector>& ambient_monomials() const { return ambient_; }
  const std::vector<Polynomial>& rows() const { return rows_; }
  int degree_of(std::size_t row) const { return degree_of_[row]; }
  int order_of(std::size_t row) const { return order_of_[row]; }

  /// Echelon basis of O_k, k clamped to 0..d+1 (O_{d+1} = 0).
  const EchelonBasis& order_level(int k) const;
  /// dim(O_k ∩ S_{<=i}), with O_k = Diff(f) for k <= 0 and 0 for k > d.
  std::size_t dim(int k, int i) const;
  /// dim Diff(f)_i = dim(Diff(f) ∩ S_{<=i}).
  std::size_t dim_up_to_degree(int i) const { return dim(0, i); }
  /// Largest k with p in O_k, or -1 if p is not a partial of f.
  int order_of(const Polynomial& p) const;

 private:
  Polynomial f_;
  int d_;
  std::vector<EchelonBasis> levels_;  // levels_[k] = O_k, k = 0..d+1
  std::vector<Polynomial> rows_;
  std::vector<ExponentVector> ambient_;
  std::vector<int> degree_of_;
  std::vector<int> order_of_;
};

FilteredSpace diff_space(const Polynomial& f);
/// dim Diff(f); 0 for f = 0.
std::size_t apolar_length(const Polynomial& f);

struct Annihilator {
  /// Reduced basis of ker(psi -> psi(f)) on dual polynomials of degree <= max_degree.
  std::vector<Polynomial> generators;
  int max_degree = 0;
  /// dim T_{<=D} / f^perp reached dim Diff(f).
  bool stabilized = false;
};

Annihilator annihilator(const Polynomial& f, int max_degree);
std::vector<Polynomial> annihilator_generators(const Polynomial& f, int max_degree);

/// Natural apolar scheme Z_{F,l}.
struct ApolarScheme {
  Polynomial defining_polynomial;  // f = dehomogenization of F at l
  Polynomial support_form;
  std::size_t length = 0;
  HilbertFunction hilbert;
  /// Annihilator of f up to degree deg F + 1, in the dehomogenized coordinates.
  std::vector<Polynomial> annihilator;
  bool stabilized = false;
  /// Homogenized generators, pulled back to the coordinates of F, annihilate F.
  bool apolarity_checked = false;
};

/// F homogeneous, l a nonzero linear form in the same variables.
ApolarScheme local_scheme(const Polynomial& F, const Polynomial& l);

/// True iff every generator and every product with a dual monomial of degree
/// <= deg F - deg g annihilates F. Throws std::invalid_argument for a
/// non-homogeneous generator or F.
bool is_apolar(const std::vector<Polynomial>& gens, const Polynomial& F);

/// Dual monomials of degree exactly k in n variables, GrlexGreater order.
std::vector<ExponentVector> monomials_of_degree(std::size_t n, int k);

}  // namespace cactus

#endif  // CACTUS_APOLAR_HPP
