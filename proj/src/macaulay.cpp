#include "cactus/macaulay.hpp"

#include <stdexcept>

namespace cactus {

std::int64_t small_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t j = 0; j < k; ++j) r = r * (n - j) / (j + 1);
  return r;
}

std::int64_t BinomialExpansion::value() const {
  std::int64_t v = 0;
  for (const auto& [m, k] : terms) v += small_binomial(m, k);
  return v;
}

BinomialExpansion binomial_expansion(std::int64_t value, int i) {
  if (value < 0) throw std::invalid_argument("binomial_expansion: negative value");
  if (i < 1) throw std::invalid_argument("binomial_expansion: i must be positive");
  BinomialExpansion out;
  out.i = i;
  std::int64_t rest = value;
  for (int k = i; k >= 1 && rest > 0; --k) {
    // Largest m with C(m, k) <= rest, walking C(m, k) upward from m = k.
    std::int64_t m = k;
    std::int64_t c = 1;
    for (;;) {
      const std::int64_t next = c * (m + 1) / (m + 1 - k);
      if (next > rest) break;
      c = next;
      ++m;
    }
    out.terms.emplace_back(m, k);
    rest -= c;
  }
  return out;
}

std::int64_t macaulay_bound(std::int64_t value, int i) {
  std::int64_t bound = 0;
  for (const auto& [m, k] : binomial_expansion(value, i).terms) bound += small_binomial(m + 1, k + 1);
  return bound;
}

bool is_o_sequence(const std::vector<int>& H, Positivity mode) {
  if (H.empty() || H[0] != 1) return false;
  for (int v : H) {
    if (v < 0) return false;
    if (mode == Positivity::strict && v == 0) return false;
  }
  for (std::size_t i = 1; i + 1 < H.size(); ++i)
    if (H[i + 1] > macaulay_bound(H[i], static_cast<int>(i))) return false;
  return true;
}

}  // namespace cactus
