#ifndef CACTUS_WITNESS_HPP
#define CACTUS_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cactus/polynomial.hpp"
#include "cactus/sequences.hpp"

namespace cactus {

/// f~ = sum_i x_{k+1}^[i_1] ... x_{k+m}^[i_m] (phi_1^{i_1} ... phi_m^{i_m})(f).
///
/// f has k variables and Diff(f)_1 = <1, x1..xk>; each phi is a dual
/// polynomial in y1..yk of order >= 2. The result has k + m variables.
/// Throws std::invalid_argument when a precondition fails.
Polynomial exotic_extend(const Polynomial& f, const std::vector<Polynomial>& phis);

struct RandomFormCheck {
  Polynomial l;
  std::size_t length = 0;
  HilbertFunction hilbert;
  bool general = false;  // hilbert == (1,3,3,1)
};

struct WitnessReport {
  Polynomial f;
  Polynomial F;  // f + x1^[2] x3 + x0 x3^[2]
  Polynomial G;  // x0-shift of F plus x1^[4], so y0(G) = F
  Polynomial g;  // G dehomogenized at x0
  std::size_t lengthG = 0;
  HilbertFunction localHilbertG;
  std::size_t lengthF = 0;
  HilbertFunction hilbertF;
  bool general = false;  // hilbertF == (1,3,3,1)
  bool apolarOK = false;
  std::optional<RandomFormCheck> random_form;

  /// lengthG <= 7, apolarity, and lengthF = 8 whenever F is general.
  bool ok() const;
};

/// f is a cubic form in x0, x1, x2 (three variables, or four with x3
/// unused) with nonzero x2^3 coefficient.
WitnessReport cusp_witness(const Polynomial& f);
/// Same, plus the length of Z_{F,l} at a random linear form drawn from `seed`.
WitnessReport cusp_witness(const Polynomial& f, std::uint64_t seed);

/// Random cubic in x0, x1, x2 with integer coefficients and x2^3 present.
Polynomial random_cusp_input(std::uint64_t seed, std::uint64_t index);

struct CuspTrials {
  std::size_t trials = 0;
  std::size_t general = 0;
  std::size_t failures = 0;   // lengthG > 7, apolarity, or a general draw with lengthF != 8
  std::size_t random_general = 0;
  std::size_t random_failures = 0;  // general random l with length != 8
  std::size_t max_lengthG = 0;
  std::vector<WitnessReport> reports;
};

CuspTrials cusp_trials(std::uint64_t seed, std::size_t trials, int threads = 1);

}  // namespace cactus

#endif  // CACTUS_WITNESS_HPP
