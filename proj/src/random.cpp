#include "cactus/random.hpp"

#include "cactus/apolar.hpp"

namespace cactus {

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Scalar random_scalar(Rng& rng, int bound, int max_den) {
  std::uniform_int_distribution<int> num(-bound, bound - 1);
  std::uniform_int_distribution<int> den(1, std::max(max_den, 1));
  int p = num(rng);
  if (p >= 0) ++p;  // skip zero
  return Scalar::rational(p, den(rng));
}

namespace {

ExponentVector random_monomial(Rng& rng, std::size_t nvars, int degree) {
  ExponentVector e(nvars, 0);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (int t = 0; t < degree; ++t) ++e[var(rng)];
  return e;
}

}  // namespace

Polynomial random_polynomial(Rng& rng, std::size_t nvars, int min_degree, int max_degree, int terms, Side side,
                             int max_den) {
  Polynomial f(nvars, side);
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  while (f.degree() != max_degree) {
    f = Polynomial(nvars, side);
    f.add_term(random_monomial(rng, nvars, max_degree), random_scalar(rng, 5, max_den));
    for (int t = 1; t < terms; ++t) f.add_term(random_monomial(rng, nvars, deg(rng)), random_scalar(rng, 5, max_den));
  }
  return f;
}

Polynomial random_form(Rng& rng, std::size_t nvars, int degree, int terms, Side side) {
  Polynomial f(nvars, side);
  while (f.is_zero()) {
    if (terms <= 0) {
      for (const auto& e : monomials_of_degree(nvars, degree)) f.add_term(e, random_scalar(rng));
    } else {
      for (int t = 0; t < terms; ++t) f.add_term(random_monomial(rng, nvars, degree), random_scalar(rng));
    }
  }
  return f;
}

Polynomial random_linear_form(Rng& rng, std::size_t nvars, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  Polynomial l(nvars, Side::primal);
  while (l.is_zero()) {
    for (std::size_t i = 0; i < nvars; ++i) {
      ExponentVector e(nvars, 0);
      e[i] = 1;
      l.add_term(e, Scalar(coeff(rng)));
    }
  }
  return l;
}

}  // namespace cactus
