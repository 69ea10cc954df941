#include "cactus/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "cactus/hilbert.hpp"
#include "cactus/macaulay.hpp"

namespace cactus {

namespace {

constexpr int kMinNonsmoothableLength = 14;

std::int64_t C(std::int64_t n, std::int64_t k) { return small_binomial(n, k); }

void check_n(const SymmetricDecomposition& delta, int n) {
  if (n < delta.total()(1)) throw std::invalid_argument("n must be at least H(1)");
}

}  // namespace

std::int64_t c_bound(int n) {
  if (n < 1) throw std::invalid_argument("c_bound: n must be positive");
  const std::int64_t total = C(n + 3, 3);
  const std::int64_t ceil = (total + n) / (n + 1);
  return std::min<std::int64_t>(ceil, 2 * n + 2);
}

std::int64_t w_bound(int l, int n) {
  const std::int64_t c = c_bound(n);
  if (l < 1 || l > c - 1)
    throw std::invalid_argument("w_bound: l must lie in 1.." + std::to_string(c - 1) + " for n = " + std::to_string(n));
  return C(n + 3, 3) - n - static_cast<std::int64_t>(n + 1) * (c - l - 1);
}

std::int64_t d_infty(const SymmetricDecomposition& delta, int n) {
  check_n(delta, n);
  const int d = delta.d;
  const auto nd = embedding_dims(delta);
  auto ni = [&](int i) { return static_cast<std::int64_t>(nd.at(static_cast<std::size_t>(i))); };
  std::int64_t total = 0;
  for (int i = 1; i <= d - 2; ++i) {
    std::int64_t inner = 0;
    for (int j = 0; j <= i - 1; ++j) inner += delta(j, d - i - 1);
    total += (n - ni(i)) * inner;
  }
  return total + (n - ni(std::max(d - 2, 0)));
}

std::int64_t d_flag(const SymmetricDecomposition& delta, int n) {
  check_n(delta, n);
  const auto nd = embedding_dims(delta);
  std::int64_t total = 0;
  for (int j = 0; j < static_cast<int>(delta.rows()); ++j) total += delta(j, 1) * static_cast<std::int64_t>(n - nd[static_cast<std::size_t>(j)]);
  return total;
}

DimBoundReport v_bound(const SymmetricDecomposition& delta, int n) {
  if (delta.d < 3) throw std::invalid_argument("v_bound: socle degree must be at least 3");
  check_n(delta, n);
  DimBoundReport r;
  r.n = n;
  r.d = delta.d;
  r.H = delta.total();
  r.l = r.H.length();
  r.delta = delta;
  r.n_dims = embedding_dims(delta);
  const int d = delta.d;
  auto ni = [&](int i) { return static_cast<std::int64_t>(r.n_dims.at(static_cast<std::size_t>(i))); };

  r.d_infty = d_infty(delta, n);
  r.d_flag = d_flag(delta, n);
  const std::int64_t cubic = C(ni(d - 3) + 2, 3) + C(ni(d - 2) + 1, 2);
  r.v_theta = cubic + ni(d - 2) + 1 + r.d_infty;
  r.v_theta_lemma = C(ni(d - 3) + 3, 3) + C(ni(d - 2) + 1, 2) + ni(d - 2) + 1 + r.d_infty;
  r.v_components = r.v_theta + r.d_flag;

  std::int64_t closed = cubic + n + 1;
  for (int i = 1; i <= d - 1; ++i) closed += (n - ni(d - i - 1)) * r.H(i);
  r.v = closed;

  std::int64_t raw = cubic + n + 1;
  for (int i = 1; i <= d - 2; ++i) {
    std::int64_t inner = 0;
    for (int j = 0; j <= i - 1; ++j) inner += delta(j, d - i - 1);
    raw += (n - ni(i)) * inner;
  }
  raw += r.d_flag;
  r.v_unsimplified = raw;

  if (r.l >= 1 && r.l <= c_bound(n) - 1) {
    r.w = w_bound(r.l, n);
    r.margin = *r.w - r.v;
  }
  return r;
}

std::string TheoremReport::summary() const {
  return std::string(pass ? "PASS" : "FAIL") + " n=" + std::to_string(n) + " cactus_rank=" + std::to_string(cactus_rank);
}

TheoremReport verify_theorem(int n, int threads, bool nonsmoothable_only) {
  TheoremReport rep;
  rep.n = n;
  rep.cactus_rank = c_bound(n);
  rep.nonsmoothable_only = nonsmoothable_only;
  if (n != 7 && n != 8) rep.notes.push_back("n = " + std::to_string(n) + " is outside the verified range 7..8");
  if (!nonsmoothable_only) rep.notes.push_back("smoothability filter disabled: the result is informational only");
  const int top = static_cast<int>(rep.cactus_rank) - 1;
  if (top < kMinNonsmoothableLength) rep.notes.push_back("no length in 14..c(n)-1; the check is vacuous");

  const std::int64_t base = C(n + 3, 3) - n;
  for (int l = kMinNonsmoothableLength; l <= top; ++l) rep.w_table[l] = w_bound(l, n);

  for (int r = kMinNonsmoothableLength; r <= top; ++r) {
    const auto candidates = admissible_decompositions(r, n, nonsmoothable_only, threads);
    std::vector<std::int64_t> vs;
    vs.reserve(candidates.size());
    for (const auto& c : candidates) {
      const std::int64_t v = v_bound(c.delta, n).v;
      vs.push_back(v);
      auto it = rep.max_v.find(r);
      if (it == rep.max_v.end() || v > it->second.first) rep.max_v[r] = {v, c.H};
    }
    for (int l = r; l <= top; ++l) {
      const std::int64_t threshold = base - static_cast<std::int64_t>(n + 1) * (l - r);
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        TheoremRow row{l, r, candidates[k], vs[k], threshold, threshold - vs[k], vs[k] < threshold};
        rep.pass = rep.pass && row.ok;
        if (!rep.worst_margin || row.margin < *rep.worst_margin) rep.worst_margin = row.margin;
        rep.rows.push_back(std::move(row));
      }
    }
  }
  std::stable_sort(rep.rows.begin(), rep.rows.end(), [](const TheoremRow& a, const TheoremRow& b) {
    return a.l != b.l ? a.l < b.l : a.r < b.r;
  });
  return rep;
}

}  // namespace cactus
