#include "cactus/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cactus/macaulay.hpp"

namespace cactus {

bool candidate_less(const DecompositionCandidate& a, const DecompositionCandidate& b) {
  if (a.d != b.d) return a.d < b.d;
  if (a.H.values != b.H.values) return a.H.values < b.H.values;
  return a.delta.deltas < b.delta.deltas;
}

namespace {

void hilbert_rec(int l, int n, int d, int i, int remaining, std::vector<int>& cur, std::vector<HilbertFunction>& out) {
  if (i == d) {
    if (remaining == 1) {
      cur.push_back(1);
      out.push_back(HilbertFunction{cur});
      cur.pop_back();
    }
    return;
  }
  // Positions i..d-1 need at least one each, position d exactly one.
  const int slack = remaining - (d - i) - 1;
  if (slack < 0) return;
  int hi = 1 + slack;
  if (i == 1) hi = std::min(hi, n);
  if (i >= 2) hi = static_cast<int>(std::min<std::int64_t>(hi, macaulay_bound(cur.back(), i - 1)));
  for (int v = 1; v <= hi; ++v) {
    cur.push_back(v);
    hilbert_rec(l, n, d, i + 1, remaining - v, cur, out);
    cur.pop_back();
  }
}

// Fills rows a = 0 .. d-2 entry by entry, keeping the running partial sum.
class DecompositionSearch {
 public:
  explicit DecompositionSearch(const HilbertFunction& H)
      : H_(H.values), d_(H.socle_degree()), rows_(d_ >= 2 ? d_ - 1 : 1), sum_(H_.size(), 0) {
    table_.assign(static_cast<std::size_t>(rows_), std::vector<int>(H_.size(), 0));
  }

  std::vector<SymmetricDecomposition> run() {
    entry(0, 0);
    return std::move(found_);
  }

 private:
  int& cell(int a, int i) { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]; }
  int& sum(int i) { return sum_[static_cast<std::size_t>(i)]; }
  int h(int i) const { return H_[static_cast<std::size_t>(i)]; }

  void entry(int a, int i) {
    const int last = d_ - a;
    if (2 * i > last) {
      finish_row(a);
      return;
    }
    const int m = last - i;
    int lo = 0;
    int hi = std::min(h(i) - sum(i), h(m) - sum(m));
    if (i == 0) lo = hi = (a == 0 ? 1 : 0);
    if (hi < lo) return;
    if (i == m) hi = h(i) - sum(i);
    for (int v = lo; v <= hi; ++v) {
      cell(a, i) = v;
      cell(a, m) = v;
      sum(i) += v;
      if (m != i) sum(m) += v;
      if (sum(i) <= h(i) && sum(m) <= h(m)) entry(a, i + 1);
      sum(i) -= v;
      if (m != i) sum(m) -= v;
      cell(a, i) = 0;
      cell(a, m) = 0;
    }
  }

  void finish_row(int a) {
    if (!is_o_sequence(sum_, Positivity::plain)) return;
    // Later rows vanish at index 0 and at every index >= d - a - 1.
    if (sum(0) != h(0)) return;
    for (int i = std::max(d_ - a - 1, 0); i <= d_; ++i)
      if (sum(i) != h(i)) return;
    if (a + 1 == rows_) {
      found_.push_back(SymmetricDecomposition{d_, table_});
      return;
    }
    entry(a + 1, 0);
  }

  std::vector<int> H_;
  int d_;
  int rows_;
  std::vector<int> sum_;
  std::vector<std::vector<int>> table_;
  std::vector<SymmetricDecomposition> found_;
};

}  // namespace

std::vector<HilbertFunction> admissible_hilbert_functions(int l, int n, int d) {
  std::vector<HilbertFunction> out;
  if (l < 1 || n < 0 || d < 0 || d + 1 > l) return out;
  if (d == 0) {
    if (l == 1) out.push_back(HilbertFunction{{1}});
    return out;
  }
  std::vector<int> cur{1};
  hilbert_rec(l, n, d, 1, l - 1, cur, out);
  return out;
}

std::vector<SymmetricDecomposition> admissible_decompositions_of(const HilbertFunction& H) {
  if (!H.is_valid()) return {};
  return DecompositionSearch(H).run();
}

std::vector<DecompositionCandidate> admissible_decompositions(int l, int n, bool nonsmoothable_only, int threads) {
  std::vector<HilbertFunction> work;
  for (int d = 3; d <= l - 1; ++d)
    for (auto& H : admissible_hilbert_functions(l, n, d))
      if (!nonsmoothable_only || nonsmoothable_filter(H)) work.push_back(std::move(H));

  std::vector<std::vector<DecompositionCandidate>> results(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < work.size(); k = next++)
      for (auto& delta : admissible_decompositions_of(work[k]))
        results[k].push_back(DecompositionCandidate{work[k], std::move(delta), work[k].socle_degree()});
  };
  unsigned count = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  count = std::min<unsigned>(count, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1)));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }

  std::vector<DecompositionCandidate> out;
  for (auto& r : results)
    for (auto& c : r) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), candidate_less);
  return out;
}

bool nonsmoothable_filter(const HilbertFunction& H) {
  const int length = H.length();
  if (length < 14) return false;
  if (H(2) <= 5 && H(3) <= 2) return false;
  if (length == 14 && H.values != std::vector<int>{1, 6, 6, 1}) return false;
  return true;
}

std::string validate_candidate(const DecompositionCandidate& c, int l, int n) {
  const auto& H = c.H;
  if (c.d != H.socle_degree() || c.d != c.delta.d) return "socle degree mismatch";
  if (c.d < 3 || c.d > l - 1) return "socle degree outside 3..l-1";
  if (!H.is_valid()) return "H(0) = H(d) = 1 and positivity";
  if (H.length() != l) return "length";
  if (H(1) > n) return "H(1) > n";
  if (!is_o_sequence(H.values, Positivity::strict)) return "Macaulay growth of H";
  if (static_cast<int>(c.delta.rows()) != c.d - 1) return "row count";
  if (!c.delta.is_valid()) return "decomposition invariants";
  if (c.delta.total() != H) return "rows do not sum to H";
  for (int a = 0; a < static_cast<int>(c.delta.rows()); ++a)
    if (!is_o_sequence(c.delta.partial_sum(a), Positivity::plain)) return "Macaulay growth of a partial sum";
  return {};
}

}  // namespace cactus
