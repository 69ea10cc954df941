#include <doctest.h>

#include "cactus/apolar.hpp"
#include "cactus/hilbert.hpp"
#include "cactus/random.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cactus;

TEST_CASE("partials of the surface example") {
  const FilteredSpace s = diff_space(X("x1^2*x2 + x2^2", 2));
  CHECK(s.dimension() == 6);
  EchelonBasis listed;
  for (const char* p : {"x1^2*x2 + x2^2", "x1^2 + x2", "x1*x2", "x1", "x2", "1"}) listed.insert(X(p, 2));
  for (const auto& r : s.rows()) CHECK(listed.contains(r));
  CHECK(apolar_length(X("x1^4 + x1^2*x2 + x2^2", 2)) == 5);
  CHECK(apolar_length(X("x1^6 + x1^3*x2", 2)) == 8);
  CHECK(apolar_length(Polynomial(2)) == 0);
  CHECK_THROWS(diff_space(Polynomial(2)));
}

TEST_CASE("powers of one variable") {
  for (int d = 0; d <= 7; ++d) {
    const FilteredSpace s(X("x1^" + std::to_string(d), 1));
    CHECK(s.dimension() == static_cast<std::size_t>(d + 1));
    for (std::size_t k = 0; k < s.dimension(); ++k) CHECK(s.degree_of(k) + s.order_of(k) == d);
  }
}

TEST_CASE("filtered space invariants on random polynomials") {
  Rng rng = trial_rng(21, 0);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 4;
    const Polynomial f = random_polynomial(rng, n, 0, 2 + t % 5, 2 + t % 5);
    const FilteredSpace s(f);
    CHECK(s.dimension() == oracle::diff_dimension(f));
    // Contains f and 1, closed under contraction.
    EchelonBasis span;
    for (const auto& r : s.rows()) span.insert(r);
    CHECK(span.contains(f));
    CHECK(span.contains(Polynomial::constant(n, Side::primal, Scalar(1))));
    for (const auto& r : s.rows())
      for (std::size_t i = 0; i < n; ++i) CHECK(span.contains(contract(Polynomial::variable(n, Side::dual, i), r)));
    // Reduced echelon: each pivot appears in one row only.
    for (std::size_t a = 0; a < s.rows().size(); ++a)
      for (std::size_t b = 0; b < s.rows().size(); ++b)
        if (a != b) CHECK(s.rows()[b].coefficient(s.rows()[a].leading_exponent()).is_zero());
    // Order: a row has order >= j iff it is a combination of y^a(f) with |a| >= j.
    const oracle::MonomialIndex idx(n, f.degree());
    for (std::size_t k = 0; k < s.dimension(); ++k) {
      for (int j = 0; j <= f.degree() + 1; ++j) {
        oracle::Matrix level = oracle::partials(f, idx, j);
        const std::size_t before = oracle::rank(level);
        oracle::Row row(idx.monomials.size());
        for (const auto& [e, c] : s.rows()[k].terms()) row[idx.position.at(e)] = c.value();
        level.push_back(row);
        const bool inside = oracle::rank(level) == before;
        CHECK(inside == (s.order_of(k) >= j));
      }
    }
  }
}

TEST_CASE("annihilator") {
  const Polynomial f = X("x1^6 + x1^3*x2", 2);
  const auto gens = annihilator_generators(f, 2);
  bool has_y2sq = false;
  for (const auto& g : gens) {
    CHECK(contract(g, f).is_zero());
    CHECK(g.order() >= 2);
    has_y2sq = has_y2sq || g == Y("y2^2", 2);
  }
  CHECK(has_y2sq);

  // Degree-3 part of the annihilator of x1^2*x2 + x2^2.
  const Polynomial h = X("x1^2*x2 + x2^2", 2);
  const Annihilator ann = annihilator(h, 3);
  CHECK(ann.stabilized);
  EchelonBasis kernel;
  for (const auto& g : ann.generators) kernel.insert(g);
  for (const char* g : {"y1^3", "y1*y2^2", "y2^3", "y1^2*y2 - y2^2", "y1*y2 - 0", "y1^2 - y2"}) {
    const Polynomial p = Y(g, 2);
    CHECK(contract(p, h).is_zero() == kernel.contains(p));
  }
  CHECK(kernel.contains(Y("y1^2*y2 - y2^2", 2)));
  CHECK_FALSE(kernel.contains(Y("y1^2*y2 - 1", 2)));
  CHECK_FALSE(annihilator(h, 1).stabilized);
}

TEST_CASE("annihilator dimension matches a dense kernel") {
  Rng rng = trial_rng(22, 0);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + t % 3;
    const Polynomial f = random_polynomial(rng, n, 0, 2 + t % 4, 4);
    for (int D = 0; D <= f.degree() + 1; ++D) {
      const Annihilator a = annihilator(f, D);
      CHECK(a.generators.size() == oracle::annihilator_dimension(f, D));
      for (const auto& g : a.generators) CHECK(contract(g, f).is_zero());
    }
    CHECK(annihilator(f, f.degree() + 1).stabilized);
  }
}

TEST_CASE("local schemes") {
  const ApolarScheme point = local_scheme(X("x0^3", 2, 0), X("x0", 2, 0));
  CHECK(point.length == 1);
  CHECK(point.hilbert.values == std::vector<int>{1});
  const ApolarScheme two = local_scheme(X("x0^2*x1", 2, 0), X("x0", 2, 0));
  CHECK(two.defining_polynomial == X("x1", 1));
  CHECK(two.length == oracle::diff_dimension(X("x1", 1)));
  CHECK(two.hilbert.values == std::vector<int>{1, 1});
  CHECK(two.apolarity_checked);

  Rng rng = trial_rng(23, 0);
  int general = 0;
  for (int t = 0; t < 20; ++t) {
    const Polynomial F = random_form(rng, 4, 3);
    const ApolarScheme z = local_scheme(F, random_linear_form(rng, 4));
    CHECK(z.apolarity_checked);
    CHECK(z.length == static_cast<std::size_t>(z.hilbert.length()));
    if (z.hilbert.values == std::vector<int>{1, 3, 3, 1}) {
      ++general;
      CHECK(z.length == 8);
    }
  }
  CHECK(general > 0);
}

TEST_CASE("apolarity checks") {
  CHECK_FALSE(is_apolar({Y("y0", 2, 0)}, X("x0^3", 2, 0)));
  CHECK(is_apolar({Y("y1", 2, 0)}, X("x0^3", 2, 0)));
  CHECK(is_apolar({}, X("x0^3", 2, 0)));
  CHECK_THROWS(is_apolar({Y("y1 + y0^2", 2, 0)}, X("x0^3", 2, 0)));
  CHECK_THROWS(is_apolar({Y("y1", 2, 0)}, X("x0^3 + x1", 2, 0)));
}

TEST_CASE("homogenization preserves length") {
  Rng rng = trial_rng(24, 0);
  for (int t = 0; t < 30; ++t) {
    const Polynomial g = random_polynomial(rng, 1 + t % 3, 0, 1 + t % 5, 4);
    const Polynomial G = homogenize(g, g.degree() + t % 3);
    CHECK(apolar_length(dehomogenize(G, Polynomial::variable(G.nvars(), Side::primal, 0)).f) == apolar_length(g));
  }
}

TEST_CASE("contracting a form shrinks its annihilator") {
  Rng rng = trial_rng(25, 0);
  for (int t = 0; t < 15; ++t) {
    const Polynomial G = random_form(rng, 3, 4, 6);
    const Polynomial F = contract(Y("y2", 3, 0), G);
    if (F.is_zero()) continue;
    for (const auto& psi : annihilator_generators(G, F.degree()))
      if (psi.is_homogeneous() && psi.degree() <= F.degree()) CHECK(contract(psi, F).is_zero());
  }
}
