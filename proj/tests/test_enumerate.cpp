#include <doctest.h>

#include <algorithm>
#include <set>

#include "cactus/enumerate.hpp"
#include "cactus/hilbert.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cactus;

namespace {

std::vector<std::string> restricted_17() {
  std::vector<std::string> out;
  for (const auto& c : admissible_decompositions(17, 8, false, 4))
    if (c.H(1) == 8 && c.H(2) >= 5) out.push_back(format_compact(c.H, c.delta));
  return out;
}

}  // namespace

TEST_CASE("length 17 with H(1) = 8 and H(2) >= 5") {
  CHECK(restricted_17() == std::vector<std::string>{
                               "(1,8,7,1) -> (1,7,7,1),(0,1,0)",
                               "(1,8,5,2,1) -> (1,2,2,2,1),(0,3,3,0),(0,3,0)",
                               "(1,8,5,2,1) -> (1,2,3,2,1),(0,2,2,0),(0,4,0)",
                               "(1,8,6,1,1) -> (1,1,1,1,1),(0,5,5,0),(0,2,0)",
                               "(1,8,5,1,1,1) -> (1,1,1,1,1,1),(0,4,4,0),(0,3,0)",
                           });
}

TEST_CASE("nonsmoothable candidates") {
  const auto c14 = admissible_decompositions(14, 7, true);
  REQUIRE(c14.size() == 1);
  CHECK(c14[0].H.values == std::vector<int>{1, 6, 6, 1});
  CHECK(c14[0].delta == SymmetricDecomposition::trivial(c14[0].H));
  CHECK(admissible_decompositions(4, 3, true).empty());
}

TEST_CASE("smoothability filter") {
  CHECK(nonsmoothable_filter({{1, 6, 6, 1}}));
  CHECK_FALSE(nonsmoothable_filter({{1, 8, 5, 2, 1}}));
  CHECK_FALSE(nonsmoothable_filter({{1, 3, 6, 3, 1}}));  // length 14 but not (1,6,6,1)
  CHECK(nonsmoothable_filter({{1, 6, 6, 1, 1}}));
  for (int d = 1; d <= 12; ++d)
    for (const auto& H : admissible_hilbert_functions(13, 12, d)) CHECK_FALSE(nonsmoothable_filter(H));
}

TEST_CASE("every candidate re-validates") {
  for (int l = 4; l <= 14; ++l)
    for (int n = 1; n <= 5; ++n)
      for (const auto& c : admissible_decompositions(l, n, false)) CHECK(validate_candidate(c, l, n).empty());
  DecompositionCandidate bad{{{1, 2, 1}}, SymmetricDecomposition::trivial({{1, 2, 1}}), 2};
  CHECK_FALSE(validate_candidate(bad, 4, 2).empty());
}

TEST_CASE("enumerator equals brute force on small instances") {
  for (int l = 1; l <= 8; ++l)
    for (int n = 1; n <= 3; ++n) {
      auto fast = admissible_decompositions(l, n, false);
      auto slow = oracle::brute_force_candidates(l, n);
      std::sort(slow.begin(), slow.end(), candidate_less);
      CHECK(fast == slow);
    }
}

TEST_CASE("output is sorted, duplicate-free and independent of threads") {
  const auto one = admissible_decompositions(15, 6, false, 1);
  const auto many = admissible_decompositions(15, 6, false, 8);
  CHECK(one == many);
  CHECK(std::is_sorted(one.begin(), one.end(), candidate_less));
  CHECK(std::adjacent_find(one.begin(), one.end()) == one.end());
}

TEST_CASE("worked polynomials appear among the candidates") {
  for (const char* text : {"x1^6 + x1^3*x2", "x1^7 + x2^6 + x1^2*x2^2", "x1^2*x2 + x2^2", "x1^4 + x1^2*x2 + x2^2"}) {
    const Polynomial f = X(text, 2);
    const HilbertFunction H = hilbert_function(f);
    const SymmetricDecomposition D = symmetric_decomposition(f);
    const auto all = admissible_decompositions(H.length(), 2, false);
    const bool found = std::any_of(all.begin(), all.end(), [&](const auto& c) { return c.H == H && c.delta == D; });
    CHECK(found);
  }
}
