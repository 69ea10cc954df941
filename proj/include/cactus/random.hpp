#ifndef CACTUS_RANDOM_HPP
#define CACTUS_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "cactus/polynomial.hpp"

namespace cactus {

using Rng = std::mt19937_64;

/// Independent stream for trial `index` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// Nonzero rational p/q with |p| <= bound and 1 <= q <= max_den.
Scalar random_scalar(Rng& rng, int bound = 5, int max_den = 1);

/// Sum of `terms` random monomials of degree in [min_degree, max_degree]
/// (duplicates merge, so fewer terms can survive). The result always has a
/// term of degree max_degree.
Polynomial random_polynomial(Rng& rng, std::size_t nvars, int min_degree, int max_degree, int terms,
                             Side side = Side::primal, int max_den = 1);

/// Homogeneous of the given degree; every monomial is present when `terms` <= 0.
Polynomial random_form(Rng& rng, std::size_t nvars, int degree, int terms = 0, Side side = Side::primal);

/// Nonzero linear form with every coefficient drawn from [-bound, bound].
Polynomial random_linear_form(Rng& rng, std::size_t nvars, int bound = 3);

}  // namespace cactus

#endif  // CACTUS_RANDOM_HPP
