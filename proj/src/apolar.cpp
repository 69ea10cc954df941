#include "cactus/apolar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cactus/ring.hpp"

namespace cactus {

namespace {

void monomials_rec(std::size_t n, int k, std::size_t at, ExponentVector& cur, std::vector<ExponentVector>& out) {
  if (at + 1 == n) {
    cur[at] = k;
    out.push_back(cur);
    cur[at] = 0;
    return;
  }
  for (int e = k; e >= 0; --e) {
    cur[at] = e;
    monomials_rec(n, k - e, at + 1, cur, out);
  }
  cur[at] = 0;
}

Polynomial dual_variable(std::size_t n, std::size_t i) { return Polynomial::variable(n, Side::dual, i); }

}  // namespace

std::vector<ExponentVector> monomials_of_degree(std::size_t n, int k) {
  std::vector<ExponentVector> out;
  if (n == 0 || k < 0) return out;
  ExponentVector cur(n, 0);
  monomials_rec(n, k, 0, cur, out);
  return out;
}

FilteredSpace::FilteredSpace(const Polynomial& f) : f_(f), d_(f.degree()) {
  if (f.is_zero()) throw std::invalid_argument("diff_space: f must be nonzero");
  if (f.side() != Side::primal) throw std::invalid_argument("diff_space: expects a primal polynomial");
  const std::size_t n = f.nvars();

  // O_0: closure of f under contraction by the variables.
  levels_.resize(static_cast<std::size_t>(d_) + 2);
  std::vector<Polynomial> pending{f};
  levels_[0].insert(f);
  while (!pending.empty()) {
    Polynomial p = std::move(pending.back());
    pending.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial q = contract(dual_variable(n, i), p);
      if (!q.is_zero() && levels_[0].insert(q)) pending.push_back(std::move(q));
    }
  }
  for (int k = 0; k <= d_; ++k) {
    auto& next = levels_[static_cast<std::size_t>(k) + 1];
    for (const auto& b : levels_[static_cast<std::size_t>(k)].rows())
      for (std::size_t i = 0; i < n; ++i) {
        Polynomial q = contract(dual_variable(n, i), b);
        if (!q.is_zero()) next.insert(q);
      }
  }

  rows_ = levels_[0].reduced_rows();
  std::set<ExponentVector, GrlexGreater> seen;
  for (const auto& r : rows_) {
    degree_of_.push_back(r.degree());
    order_of_.push_back(order_of(r));
    for (const auto& [e, c] : r.terms()) seen.insert(e);
  }
  ambient_.assign(seen.begin(), seen.end());
}

const EchelonBasis& FilteredSpace::order_level(int k) const {
  const int clamped = std::clamp(k, 0, d_ + 1);
  return levels_[static_cast<std::size_t>(clamped)];
}

std::size_t FilteredSpace::dim(int k, int i) const {
  if (i < 0) return 0;
  return order_level(k).rank_up_to_degree(i);
}

int FilteredSpace::order_of(const Polynomial& p) const {
  if (!levels_[0].contains(p)) return -1;
  int k = 0;
  while (k + 1 <= d_ + 1 && levels_[static_cast<std::size_t>(k) + 1].contains(p)) ++k;
  return k;
}

FilteredSpace diff_space(const Polynomial& f) { return FilteredSpace(f); }

std::size_t apolar_length(const Polynomial& f) { return f.is_zero() ? 0 : FilteredSpace(f).dimension(); }

Annihilator annihilator(const Polynomial& f, int max_degree) {
  if (f.side() != Side::primal) throw std::invalid_argument("annihilator: expects a primal polynomial");
  if (max_degree < 0) throw std::invalid_argument("annihilator: max_degree must be nonnegative");
  const std::size_t n = f.nvars();
  KernelTracker tracker;
  EchelonBasis kernel;
  for (int k = 0; k <= max_degree; ++k) {
    for (const auto& a : monomials_of_degree(n, k)) {
      const Polynomial label = Polynomial::monomial(Side::dual, a);
      if (auto z = tracker.insert(contract(label, f), label)) kernel.insert(*z);
    }
  }
  Annihilator out;
  out.generators = kernel.reduced_rows();
  out.max_degree = max_degree;
  out.stabilized = tracker.rank() == apolar_length(f);
  return out;
}

std::vector<Polynomial> annihilator_generators(const Polynomial& f, int max_degree) {
  return annihilator(f, max_degree).generators;
}

ApolarScheme local_scheme(const Polynomial& F, const Polynomial& l) {
  if (F.is_zero()) throw std::invalid_argument("local_scheme: F must be nonzero");
  Dehomogenized dh = dehomogenize(F, l);
  const FilteredSpace space(dh.f);

  ApolarScheme out;
  out.defining_polynomial = dh.f;
  out.support_form = l;
  out.length = space.dimension();
  for (int i = 0; i <= space.socle_degree(); ++i)
    out.hilbert.values.push_back(static_cast<int>(space.dim(0, i) - space.dim(0, i - 1)));

  Annihilator ann = annihilator(dh.f, F.degree() + 1);
  out.stabilized = ann.stabilized;
  std::vector<Polynomial> lifted;
  lifted.reserve(ann.generators.size());
  for (const auto& psi : ann.generators) lifted.push_back(dh.change.dual_to_original(homogenize_dual(psi)));
  out.annihilator = std::move(ann.generators);
  out.apolarity_checked = is_apolar(lifted, F);
  return out;
}

bool is_apolar(const std::vector<Polynomial>& gens, const Polynomial& F) {
  if (F.side() != Side::primal) throw std::invalid_argument("is_apolar: F must be primal");
  if (!F.is_homogeneous()) throw std::invalid_argument("is_apolar: F must be homogeneous");
  const int D = F.degree();
  for (const auto& g : gens) {
    if (g.side() != Side::dual || g.nvars() != F.nvars())
      throw std::invalid_argument("is_apolar: generators must be dual polynomials in the variables of F");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("is_apolar: generator " + g.to_string(0) + " is not homogeneous");
    for (int k = 0; k <= D - g.degree(); ++k)
      for (const auto& a : monomials_of_degree(F.nvars(), k))
        if (!contract(g * Polynomial::monomial(Side::dual, a), F).is_zero()) return false;
  }
  return true;
}

}  // namespace cactus
