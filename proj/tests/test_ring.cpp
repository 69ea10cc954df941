#include <doctest.h>

#include "cactus/apolar.hpp"
#include "cactus/random.hpp"
#include "cactus/ring.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cactus;

TEST_CASE("scalars over Q and F_p") {
  CHECK((Scalar::rational(2, 4) == Scalar::rational(1, 2)));
  CHECK((Scalar(3) / Scalar(6)).to_string() == "1/2");
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK_THROWS_AS(Scalar::rational(1, 0), std::domain_error);
  const Scalar a = Scalar::modular(3, 7);
  CHECK((a * Scalar::modular(5, 7)).to_string() == "1");
  CHECK(((Scalar(1) / a) * a).is_one());
  CHECK((Scalar::rational(1, 2).in_field(7) * Scalar::modular(2, 7)).is_one());
  CHECK_THROWS(Scalar::modular(1, 3));
  CHECK_THROWS(Scalar::modular(1, 9));
  CHECK_THROWS(Scalar::modular(1, 7) + Scalar::modular(1, 11));
}

TEST_CASE("parsing and printing") {
  CHECK(X("x1^6 + x1^3*x2", 2).to_string() == "x1^6 + x1^3*x2");
  CHECK(X("  -3/6*x1*x2 +x2^2 - 1", 2).to_string() == "-1/2*x1*x2 + x2^2 - 1");
  CHECK(X("x0^3 + x1", 2, 0).to_string(0) == "x0^3 + x1");
  CHECK(X("x1 - x1", 1).is_zero());
  CHECK(Y("y1^2*y2 - y2^2", 2).to_string() == "y1^2*y2 - y2^2");
  CHECK_THROWS_AS(X("x3", 2), ParseError);
  CHECK_THROWS_AS(X("x0", 2), ParseError);
  CHECK_THROWS_AS(X("y1", 2), ParseError);
  CHECK_THROWS_AS(X("x1 +", 2), ParseError);
  CHECK_THROWS_AS(X("1/0*x1", 2), ParseError);
  CHECK_THROWS_AS(X("", 2), ParseError);
  try {
    X("x1 + x2 $", 2);
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
  const auto p = parse("3*x1 + x2", 2, Side::primal, ParseOptions{1, 5});
  CHECK(p.coefficient({1, 0}).to_string() == "3");
}

TEST_CASE("divided-power product") {
  // x^[a] x^[b] = C(a+b, a) x^[a+b]
  CHECK((X("x1^2", 1) * X("x1^3", 1)).to_string() == "10*x1^5");
  CHECK((X("x1", 2) * X("x2", 2)).to_string() == "x1*x2");
  CHECK((Y("y1^2", 1) * Y("y1^3", 1)).to_string() == "y1^5");
}

TEST_CASE("contraction") {
  CHECK(contract(Y("y2", 2), X("x1^2*x2 + x2^2", 2)) == X("x1^2 + x2", 2));
  CHECK(contract(Y("1", 2), X("x1^2*x2 + x2^2", 2)) == X("x1^2*x2 + x2^2", 2));
  CHECK(contract(Y("-y2 + y1^3", 2), X("x1^6 + x1^3*x2", 2)) == X("x2", 2));
  CHECK(contract(Y("y1^7", 2), X("x1^6 + x1^3*x2", 2)).is_zero());
  CHECK_THROWS(contract(X("x1", 2), X("x1", 2)));
  CHECK_THROWS(contract(Y("y1", 2), X("x1", 3)));
}

TEST_CASE("contraction is a module action of bounded degree") {
  Rng rng = trial_rng(11, 0);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 3;
    const Polynomial f = random_polynomial(rng, n, 0, 5, 6);
    const Polynomial a = random_polynomial(rng, n, 0, 2, 2, Side::dual);
    const Polynomial b = random_polynomial(rng, n, 0, 2, 2, Side::dual);
    CHECK(contract(a * b, f) == contract(a, contract(b, f)));
    const Polynomial r = contract(a, f);
    if (!r.is_zero()) CHECK(r.degree() <= f.degree() - a.order());
  }
}

TEST_CASE("tails") {
  CHECK(tail(X("x1^6 + x1^3*x2 + x1", 2), 4) == X("x1^3*x2 + x1", 2));
  const Polynomial f = X("x1^6 + x1^3*x2", 2);
  CHECK(tail(f, f.degree()) == f);
  CHECK(tail(f, 99) == f);
  CHECK(tail(X("x0^3 + x1^3 + x2^3", 3, 0), 2).is_zero());
  CHECK(f.homogeneous_component(4) == X("x1^3*x2", 2));
  CHECK_THROWS(tail(f, -1));
}

TEST_CASE("dehomogenize and homogenize") {
  CHECK(dehomogenize(X("x0^3 + x0*x1^2", 2, 0), X("x0", 2, 0)).f == X("1 + x1^2", 1));
  CHECK(dehomogenize(X("x0^2*x1", 2, 0), X("x0", 2, 0)).f == X("x1", 1));
  CHECK(homogenize(X("1 + x1^2", 1), 3) == X("x0^3 + x0*x1^2", 2, 0));
  CHECK(homogenize(Polynomial(1), 5).is_zero());
  const Polynomial g = X("x1^3 + x1*x2 + 2", 2);
  const Polynomial G = homogenize(g, g.degree());
  CHECK(G.homogeneous_component(3).restricted(3).is_zero() == false);
  CHECK(dehomogenize(G, X("x0", 3, 0)).f == g);
  CHECK_THROWS(homogenize(g, 2));
  CHECK_THROWS(dehomogenize(X("x0^2 + x1", 2, 0), X("x0", 2, 0)));
  CHECK_THROWS(dehomogenize(X("x0^2", 2, 0), X("x0^2", 2, 0)));
  CHECK_THROWS(dehomogenize(X("x0^2", 2, 0), Polynomial(2)));
}

TEST_CASE("dehomogenize at x0 + x1 matches a dense substitution") {
  // New coordinates z0 = x0 + x1, z1 = x1, so x0 = z0 - z1 and x1 = z1.
  const Polynomial F = X("x0^3 + x1^3", 2, 0);
  const Polynomial sub = oracle::substitute(F, {{1, -1}, {0, 1}});
  Polynomial expected(1);
  for (const auto& [e, c] : sub.terms()) expected.add_term({e[1]}, c);
  const auto dh = dehomogenize(F, X("x0 + x1", 2, 0));
  CHECK(dh.f == expected);
  // The cubic part cancels: the result has degree 2.
  CHECK(dh.f == X("x1^2 - x1 + 1", 1));
}

TEST_CASE("dehomogenization is injective on forms") {
  Rng rng = trial_rng(12, 0);
  for (int t = 0; t < 30; ++t) {
    const Polynomial F = random_form(rng, 3, 3, 4);
    const Polynomial l = random_linear_form(rng, 3);
    const auto dh = dehomogenize(F, l);
    const Polynomial back = dh.change.to_original(homogenize(dh.f, 3));
    CHECK(back == F);
  }
}

TEST_CASE("change of basis agrees with ordinary substitution") {
  Rng rng = trial_rng(13, 0);
  for (int t = 0; t < 20; ++t) {
    ChangeOfBasis::Matrix m(3, std::vector<Scalar>(3));
    std::vector<std::vector<mpq_class>> inv(3, std::vector<mpq_class>(3));
    for (;;) {
      for (auto& row : m)
        for (auto& x : row) x = Scalar(static_cast<long>(rng() % 5) - 2);
      try {
        ChangeOfBasis probe(m);
        break;
      } catch (const std::invalid_argument&) {
      }
    }
    const ChangeOfBasis c(m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) inv[i][j] = c.inverse()[i][j].value();
    const Polynomial f = random_polynomial(rng, 3, 0, 4, 5);
    CHECK(c.to_new(f) == oracle::substitute(f, inv));
    CHECK(c.to_original(c.to_new(f)) == f);
    // Contraction is preserved.
    const Polynomial psi = random_polynomial(rng, 3, 0, 2, 3, Side::dual);
    CHECK(c.to_new(contract(psi, f)) == contract(c.dual_to_new(psi), c.to_new(f)));
    CHECK(c.dual_to_original(c.dual_to_new(psi)) == psi);
  }
  CHECK_THROWS(ChangeOfBasis({{1, 2}, {2, 4}}));
}

TEST_CASE("tail lemma and its corollary") {
  Rng rng = trial_rng(14, 0);
  int zero_cases = 0;
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 2 + t % 3;
    const int deg = 2 + t % 4;
    const Polynomial F = random_form(rng, n, deg, 5);
    const Polynomial Psi = random_form(rng, n, 1 + t % deg, 3, Side::dual);
    const Polynomial PF = contract(Psi, F);
    const Polynomial x0 = Polynomial::variable(n, Side::primal, 0);
    const Polynomial f = dehomogenize(F, x0).f;
    const Polynomial psi = dehomogenize_dual(Psi);
    const int d = deg - Psi.degree();
    const Polynomial lhs = tail(dehomogenize(PF.is_zero() ? Polynomial(n) : PF, x0).f, d);
    CHECK(lhs == tail(contract(psi, f), d));
    if (contract(psi, f).is_zero()) {
      ++zero_cases;
      CHECK(PF.is_zero());
    }
  }
  // psi(f) = 0 forces Psi(F) = 0 on constructed instances too.
  const Polynomial F = X("x0^2*x1 + x2^3", 3, 0);
  const Polynomial Psi = Y("y1*y2", 3, 0);
  CHECK(contract(dehomogenize_dual(Psi), dehomogenize(F, X("x0", 3, 0)).f).is_zero());
  CHECK(contract(Psi, F).is_zero());
}
