#ifndef CACTUS_BOUNDS_HPP
#define CACTUS_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cactus/enumerate.hpp"
#include "cactus/sequences.hpp"

namespace cactus {

/// c(n) = min(ceil(C(n+3,3) / (n+1)), 2n+2).
std::int64_t c_bound(int n);
/// w(3,l,n) = C(n+3,3) - n - (n+1)(c(n) - l - 1), for 1 <= l <= c(n) - 1.
std::int64_t w_bound(int l, int n);

/// sum_{i=1}^{d-2} (n - n_i) sum_{j<i} Delta_j(d-i-1) + (n - n_{d-2}).
std::int64_t d_infty(const SymmetricDecomposition& delta, int n);
/// sum_j Delta_j(1) (n - n_j): dimension of the flag of linear partials.
std::int64_t d_flag(const SymmetricDecomposition& delta, int n);

struct DimBoundReport {
  int n = 0;
  int l = 0;
  int d = 0;
  HilbertFunction H;
  SymmetricDecomposition delta;
  std::vector<int> n_dims;
  std::int64_t d_infty = 0;
  std::int64_t d_flag = 0;
  /// C(n_{d-3}+2,3) + C(n_{d-2}+1,2) + n_{d-2} + 1 + d_infty.
  std::int64_t v_theta = 0;
  /// Same with C(n_{d-3}+3,3), the variant printed alongside the two-bounds lemma.
  std::int64_t v_theta_lemma = 0;
  /// Closed form C(n_{d-3}+2,3) + C(n_{d-2}+1,2) + n + 1 + sum_{i=1}^{d-1} (n - n_{d-i-1}) H(i).
  std::int64_t v = 0;
  /// v_theta + d_flag.
  std::int64_t v_components = 0;
  /// The unsimplified sum, before collecting terms by H(i).
  std::int64_t v_unsimplified = 0;
  /// w(3,l,n) and w - v when l is in range.
  std::optional<std::int64_t> w;
  std::optional<std::int64_t> margin;

  bool consistent() const { return v == v_components && v == v_unsimplified; }
};

/// Throws std::invalid_argument when d < 3 or n < H(1).
DimBoundReport v_bound(const SymmetricDecomposition& delta, int n);

struct TheoremRow {
  int l = 0;
  int r = 0;
  DecompositionCandidate candidate;
  std::int64_t v = 0;
  std::int64_t threshold = 0;  // C(n+3,3) - n - (n+1)(l - r)
  std::int64_t margin = 0;     // threshold - v
  bool ok = false;
};

struct TheoremReport {
  int n = 0;
  std::int64_t cactus_rank = 0;  // c(n)
  bool nonsmoothable_only = true;
  bool pass = true;
  std::vector<TheoremRow> rows;
  std::map<int, std::int64_t> w_table;  // l -> w(3,l,n), l = 14 .. c(n)-1
  std::optional<std::int64_t> worst_margin;
  /// r -> (max v, the H attaining it first in candidate order).
  std::map<int, std::pair<std::int64_t, HilbertFunction>> max_v;
  std::vector<std::string> notes;

  std::string summary() const;
};

/// Checks v < C(n+3,3) - n - (n+1)(l-r) for every candidate of length r,
/// 14 <= r <= l <= c(n) - 1.
TheoremReport verify_theorem(int n, int threads = 1, bool nonsmoothable_only = true);

}  // namespace cactus

#endif  // CACTUS_BOUNDS_HPP
