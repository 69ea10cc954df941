#include "cactus/echelon.hpp"

namespace cactus {

Polynomial EchelonBasis::reduce(Polynomial v) const {
  auto it = v.terms().begin();
  while (it != v.terms().end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const ExponentVector key = it->first;
    v.axpy(-it->second, row->second);
    it = v.terms().upper_bound(key);
  }
  return v;
}

bool EchelonBasis::insert(const Polynomial& v) {
  Polynomial r = reduce(v);
  if (r.is_zero()) return false;
  r *= Scalar(1) / r.leading_coefficient();
  ExponentVector key = r.leading_exponent();
  rows_.emplace(std::move(key), std::move(r));
  return true;
}

std::size_t EchelonBasis::rank_up_to_degree(int i) const {
  std::size_t count = 0;
  for (auto it = rows_.rbegin(); it != rows_.rend() && total_degree(it->first) <= i; ++it) ++count;
  return count;
}

std::vector<Polynomial> EchelonBasis::reduced_rows() const {
  std::vector<Polynomial> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) {
    Polynomial rest = row;
    rest.add_term(pivot, -row.leading_coefficient());
    Polynomial reduced = reduce(std::move(rest));
    reduced.add_term(pivot, Scalar(1));
    out.push_back(std::move(reduced));
  }
  return out;
}

std::vector<Polynomial> EchelonBasis::rows() const {
  std::vector<Polynomial> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(row);
  return out;
}

std::optional<Polynomial> KernelTracker::insert(const Polynomial& image, const Polynomial& label) {
  Polynomial v = image;
  Polynomial tag = label;
  auto it = v.terms().begin();
  while (it != v.terms().end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const ExponentVector key = it->first;
    const Scalar c = -it->second;
    v.axpy(c, row->second.image);
    tag.axpy(c, row->second.label);
    it = v.terms().upper_bound(key);
  }
  if (v.is_zero()) return tag;
  const Scalar scale = Scalar(1) / v.leading_coefficient();
  v *= scale;
  tag *= scale;
  ExponentVector key = v.leading_exponent();
  rows_.emplace(std::move(key), Row{std::move(v), std::move(tag)});
  return std::nullopt;
}

}  // namespace cactus
