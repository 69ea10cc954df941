#ifndef CACTUS_ENUMERATE_HPP
#define CACTUS_ENUMERATE_HPP

#include <string>
#include <vector>

#include "cactus/sequences.hpp"

namespace cactus {

struct DecompositionCandidate {
  HilbertFunction H;
  SymmetricDecomposition delta;
  int d = 0;

  auto operator<=>(const DecompositionCandidate&) const = default;
};

/// Ascending socle degree, then H lexicographically, then the Delta table.
bool candidate_less(const DecompositionCandidate& a, const DecompositionCandidate& b);

/// Hilbert functions of socle degree d and length l with H(1) <= n, all
/// values positive and Macaulay growth, in lexicographic order.
std::vector<HilbertFunction> admissible_hilbert_functions(int l, int n, int d);

/// Symmetric decompositions of H whose partial sums all satisfy Macaulay growth.
std::vector<SymmetricDecomposition> admissible_decompositions_of(const HilbertFunction& H);

/// Every admissible (H, Delta) with length l, H(1) <= n and socle degree
/// 3 <= d <= l - 1, sorted by candidate_less. `threads` <= 0 picks the
/// hardware concurrency.
std::vector<DecompositionCandidate> admissible_decompositions(int l, int n, bool nonsmoothable_only,
                                                              int threads = 1);

/// Length >= 14, not (H(2) <= 5 and H(3) <= 2), and at length 14 only
/// H = (1,6,6,1).
bool nonsmoothable_filter(const HilbertFunction& H);

/// Re-checks every candidate invariant from scratch. Returns an empty string
/// when valid, otherwise the first violated condition.
std::string validate_candidate(const DecompositionCandidate& c, int l, int n);

}  // namespace cactus

#endif  // CACTUS_ENUMERATE_HPP
