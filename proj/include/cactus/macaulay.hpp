#ifndef CACTUS_MACAULAY_HPP
#define CACTUS_MACAULAY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace cactus {

/// value = sum_k C(m_k, k), with m_i > m_{i-1} > ... > m_j >= j >= 1.
struct BinomialExpansion {
  int i = 1;
  /// (m_k, k) pairs, k decreasing.
  std::vector<std::pair<std::int64_t, int>> terms;

  std::int64_t value() const;
};

/// Exact C(n, k) in 64 bits; 0 when k < 0 or k > n.
std::int64_t small_binomial(std::int64_t n, std::int64_t k);

/// Greedy i-binomial expansion. Throws std::invalid_argument for value < 0 or i < 1.
BinomialExpansion binomial_expansion(std::int64_t value, int i);
/// value^<i> = sum_k C(m_k + 1, k + 1): the largest admissible next value.
std::int64_t macaulay_bound(std::int64_t value, int i);

enum class Positivity {
  plain,   // zero tails allowed (partial sums of a decomposition)
  strict,  // every entry >= 1 (Hilbert function up to its socle degree)
};

/// H(0) = 1 and H(i+1) <= macaulay_bound(H(i), i) for i >= 1.
bool is_o_sequence(const std::vector<int>& H, Positivity mode = Positivity::strict);

}  // namespace cactus

#endif  // CACTUS_MACAULAY_HPP
