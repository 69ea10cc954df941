#include <doctest.h>

#include "cactus/hilbert.hpp"
#include "cactus/macaulay.hpp"
#include "cactus/random.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cactus;

namespace {

std::vector<int> row(std::initializer_list<int> v, int d) {
  std::vector<int> r(v);
  r.resize(static_cast<std::size_t>(d + 1), 0);
  return r;
}

}  // namespace

TEST_CASE("Hilbert functions of the worked examples") {
  CHECK(hilbert_function(X("x1^6 + x1^3*x2", 2)).values == std::vector<int>{1, 2, 1, 1, 1, 1, 1});
  CHECK(hilbert_function(X("x1^7 + x2^6 + x1^2*x2^2", 2)).values == std::vector<int>{1, 2, 3, 2, 2, 2, 1, 1});
  CHECK(hilbert_function(X("x1^2*x2 + x2^2", 2)).values == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("decomposition tables") {
  const auto exto = symmetric_decomposition(X("x1^6 + x1^3*x2", 2));
  CHECK(exto.rows() == 5);
  CHECK(exto.deltas[0] == row({1, 1, 1, 1, 1, 1, 1}, 6));
  CHECK(exto.deltas[4] == row({0, 1}, 6));
  for (int a : {1, 2, 3}) CHECK(exto.deltas[static_cast<std::size_t>(a)] == row({}, 6));

  const auto second = symmetric_decomposition(X("x1^7 + x2^6 + x1^2*x2^2", 2));
  CHECK(second.deltas[0] == row({1, 1, 1, 1, 1, 1, 1, 1}, 7));
  CHECK(second.deltas[1] == row({0, 1, 1, 1, 1, 1}, 7));
  CHECK(second.deltas[3] == row({0, 0, 1}, 7));
  for (int a : {2, 4, 5}) CHECK(second.deltas[static_cast<std::size_t>(a)] == row({}, 7));

  for (int d = 0; d <= 6; ++d) {
    const auto power = symmetric_decomposition(X("x1^" + std::to_string(d), 1));
    CHECK(power.deltas[0] == std::vector<int>(static_cast<std::size_t>(d + 1), 1));
    for (std::size_t a = 1; a < power.rows(); ++a) CHECK(power.deltas[a] == row({}, d));
  }
}

TEST_CASE("decomposition agrees with the dense subspace oracle") {
  Rng rng = trial_rng(31, 0);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 3;
    const Polynomial f = random_polynomial(rng, n, 0, 1 + t % 6, 2 + t % 4);
    CHECK(hilbert_function(f).values == oracle::hilbert(f));
    CHECK(symmetric_decomposition(f).deltas == oracle::decomposition(f));
  }
  CHECK(symmetric_decomposition(X("x1^7 + x2^6 + x1^2*x2^2", 2)).deltas ==
        oracle::decomposition(X("x1^7 + x2^6 + x1^2*x2^2", 2)));
}

TEST_CASE("decomposition properties on random polynomials") {
  Rng rng = trial_rng(32, 0);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + t % 5;
    const Polynomial f = random_polynomial(rng, n, 0, 1 + t % 6, 1 + t % 7);
    const FilteredSpace s(f);
    const HilbertFunction H = hilbert_function(s);
    const SymmetricDecomposition D = symmetric_decomposition(s);
    CHECK(D.total() == H);
    CHECK(D.is_valid());
    for (std::size_t a = 0; a < D.rows(); ++a)
      CHECK(is_o_sequence(D.partial_sum(static_cast<int>(a)), Positivity::plain));
    CHECK(static_cast<std::size_t>(H.length()) == s.dimension());
  }
}

TEST_CASE("Hilbert function is bounded by the top summands") {
  Rng rng = trial_rng(33, 0);
  for (int t = 0; t < 60; ++t) {
    const Polynomial f = random_polynomial(rng, 1 + t % 3, 0, 2 + t % 5, 3 + t % 4);
    const auto D = symmetric_decomposition(f);
    int alpha = 0;
    for (int a = 0; a < static_cast<int>(D.rows()); ++a)
      for (int i = 0; i <= D.d; ++i)
        if (D(a, i) != 0) alpha = a;
    Polynomial top(f.nvars());
    for (int k = f.degree() - alpha; k <= f.degree(); ++k) top += f.homogeneous_component(k);
    const auto Hf = hilbert_function(f);
    const auto Ht = hilbert_function(top);
    for (int i = 0; i <= f.degree(); ++i) CHECK(Hf(i) <= Ht(i));
  }
}

TEST_CASE("embedding dimensions") {
  const auto D = parse_compact("(1,4,5,4,1,1,1) -> (1,1,1,1,1,1,1),(0,3,4,3,0)");
  CHECK(embedding_dims(D) == std::vector<int>{1, 1, 4, 4, 4});
  CHECK(embedding_dims(symmetric_decomposition(X("x1^6 + x1^3*x2", 2))) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(embedding_dims(SymmetricDecomposition::trivial({{1, 3, 3, 1}})) == std::vector<int>{3, 3});
}

TEST_CASE("coordinate adaptation") {
  const auto same = adapt_coordinates(X("x1^6 + x1^3*x2", 2));
  CHECK(same.change.is_identity());
  CHECK(same.f == X("x1^6 + x1^3*x2", 2));
  CHECK(same.flag_dims == std::vector<int>{1, 1, 1, 1, 2});

  const auto swapped = adapt_coordinates(X("x2^6 + x2^3*x1", 2));
  CHECK(swapped.f == X("x1^6 + x1^3*x2", 2));
  CHECK(swapped.change.forward()[0][1].is_one());
  CHECK(swapped.change.forward()[1][0].is_one());

  // x2 is not a linear partial of x1^3 + x1*x2 but f involves it: hidden.
  const auto hidden = adapt_coordinates(X("x1^3 + x1*x2", 3));
  CHECK(hidden.removed == 1);
  CHECK(hidden.hidden == 1);
  CHECK(hidden.f == X("x1^3 + x1*x2", 2));
  CHECK(hidden.flag_dims == std::vector<int>{1, 1});

  const auto dropped = adapt_coordinates(X("x1^3 + x3^2", 3));
  CHECK(dropped.removed == 1);
  CHECK(dropped.hidden == 0);
  CHECK(dropped.f == X("x1^3 + x2^2", 2));
}

TEST_CASE("leading summands live in the first n_{i-j} variables") {
  Rng rng = trial_rng(34, 0);
  for (int t = 0; t < 40; ++t) {
    const Polynomial f0 = random_polynomial(rng, 2 + t % 3, 0, 3 + t % 4, 3 + t % 3);
    const auto a = adapt_coordinates(f0);
    const FilteredSpace s(a.f);
    const int d = s.socle_degree();
    const auto nd = embedding_dims(symmetric_decomposition(s));
    CHECK(nd.back() + static_cast<int>(a.hidden) == static_cast<int>(a.f.nvars()));
    CHECK(a.flag_dims == nd);
    // Every partial of f of degree d - i and order j, built as y^b(f) with |b| = j.
    for (const auto& b : oracle::MonomialIndex(a.f.nvars(), d).monomials) {
      const int j = total_degree(b);
      const Polynomial p = contract(Polynomial::monomial(Side::dual, b), a.f);
      if (p.is_zero()) continue;
      const int i = d - p.degree();
      const int order = s.order_of(p);
      if (order != j || i - j < 0 || i - j >= static_cast<int>(nd.size())) continue;
      const Polynomial lead = p.homogeneous_component(p.degree());
      for (std::size_t v = static_cast<std::size_t>(nd[static_cast<std::size_t>(i - j)]); v < a.f.nvars(); ++v)
        CHECK_FALSE(lead.involves(v));
    }
  }
}

TEST_CASE("compact notation round trip") {
  const std::string text = "(1,4,5,4,1,1,1) -> (1,1,1,1,1,1,1),(0,3,4,3,0)";
  HilbertFunction H;
  const auto D = parse_compact(text, &H);
  CHECK(H.values == std::vector<int>{1, 4, 5, 4, 1, 1, 1});
  CHECK(D.deltas[2] == row({0, 3, 4, 3, 0}, 6));
  CHECK(format_compact(H, D) == text);
  CHECK_THROWS(parse_compact("(1,2,1) -> (1,1,1)"));
  CHECK_THROWS(parse_compact("(1,2,2,1) (1,2,2,1)"));
  CHECK_THROWS(parse_sequence("(1,2,"));
}
