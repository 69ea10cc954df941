#include "cactus/witness.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "cactus/apolar.hpp"
#include "cactus/hilbert.hpp"
#include "cactus/random.hpp"
#include "cactus/ring.hpp"

namespace cactus {

namespace {

const HilbertFunction kGeneralCubic{{1, 3, 3, 1}};

void extend_rec(const std::vector<Polynomial>& phis, std::size_t k, std::size_t r, int budget, const Polynomial& g,
                ExponentVector& idx, Polynomial& out) {
  if (r == phis.size()) {
    for (const auto& [e, c] : g.terms()) {
      ExponentVector full(e);
      full.insert(full.end(), idx.begin(), idx.end());
      out.add_term(full, c);
    }
    return;
  }
  Polynomial cur = g;
  for (int t = 0;; ++t) {
    idx[r] = t;
    extend_rec(phis, k, r + 1, budget - 2 * t, cur, idx, out);
    if (2 * (t + 1) > budget) break;
    cur = contract(phis[r], cur);
    if (cur.is_zero()) break;
  }
  idx[r] = 0;
}

// x^[b] -> x^[b + e0].
Polynomial shift_first(const Polynomial& F) {
  Polynomial r(F.nvars(), Side::primal);
  for (const auto& [e, c] : F.terms()) {
    ExponentVector shifted(e);
    ++shifted[0];
    r.add_term(shifted, c);
  }
  return r;
}

Polynomial dp_monomial(ExponentVector e) { return Polynomial::monomial(Side::primal, std::move(e)); }

}  // namespace

Polynomial exotic_extend(const Polynomial& f, const std::vector<Polynomial>& phis) {
  if (f.side() != Side::primal) throw std::invalid_argument("exotic_extend: f must be primal");
  if (f.is_zero()) throw std::invalid_argument("exotic_extend: f must be nonzero");
  const std::size_t k = f.nvars();
  std::vector<Polynomial> ops;
  for (const auto& phi : phis) {
    if (phi.side() != Side::dual) throw std::invalid_argument("exotic_extend: phi must be a dual polynomial");
    if (phi.nvars() < k) throw std::invalid_argument("exotic_extend: phi has fewer variables than f");
    for (std::size_t v = k; v < phi.nvars(); ++v)
      if (phi.involves(v)) throw std::invalid_argument("exotic_extend: phi " + phi.to_string() + " involves a new variable");
    const Polynomial op = phi.restricted(k);
    if (!op.is_zero() && op.order() < 2)
      throw std::invalid_argument("exotic_extend: phi " + phi.to_string() + " has order < 2");
    ops.push_back(op);
  }
  const FilteredSpace space(f);
  if (space.dim(0, 1) != k + 1)
    throw std::invalid_argument("exotic_extend: the linear partials of f must span all " + std::to_string(k) + " variables");

  Polynomial out(k + ops.size(), Side::primal);
  ExponentVector idx(ops.size(), 0);
  extend_rec(ops, k, 0, f.degree(), f, idx, out);
  return out;
}

bool WitnessReport::ok() const {
  const bool lengthsOK = lengthG <= 7 && (!general || lengthF == 8);
  const bool randomOK = !random_form || !random_form->general || random_form->length == 8;
  return lengthsOK && apolarOK && randomOK;
}

WitnessReport cusp_witness(const Polynomial& f) {
  if (f.side() != Side::primal) throw std::invalid_argument("cusp_witness: f must be primal");
  if (f.nvars() != 3 && !(f.nvars() == 4 && !f.involves(3)))
    throw std::invalid_argument("cusp_witness: f must be a form in x0, x1, x2");
  if (f.degree() != 3 || !f.is_homogeneous()) throw std::invalid_argument("cusp_witness: f must be a cubic form");
  const Polynomial f4 = f.nvars() == 4 ? f : f.extended(1);
  if (f4.coefficient({0, 0, 3, 0}).is_zero()) throw std::invalid_argument("cusp_witness: the coefficient of x2^3 is zero");

  WitnessReport r;
  r.f = f4;
  r.F = f4 + dp_monomial({0, 2, 0, 1}) + dp_monomial({1, 0, 0, 2});
  r.G = shift_first(r.F) + dp_monomial({0, 4, 0, 0});
  const Polynomial x0 = Polynomial::variable(4, Side::primal, 0);

  r.g = dehomogenize(r.G, x0).f;
  const FilteredSpace gspace(r.g);
  r.lengthG = gspace.dimension();
  r.localHilbertG = hilbert_function(gspace);

  const Polynomial fl = dehomogenize(r.F, x0).f;
  const FilteredSpace fspace(fl);
  r.lengthF = fspace.dimension();
  r.hilbertF = hilbert_function(fspace);
  r.general = r.hilbertF == kGeneralCubic;

  std::vector<Polynomial> lifted;
  for (const auto& psi : annihilator_generators(r.g, 4)) lifted.push_back(homogenize_dual(psi));
  r.apolarOK = is_apolar(lifted, r.F);
  return r;
}

WitnessReport cusp_witness(const Polynomial& f, std::uint64_t seed) {
  WitnessReport r = cusp_witness(f);
  Rng rng = trial_rng(seed, 0x6c);
  RandomFormCheck check;
  check.l = random_linear_form(rng, 4);
  const ApolarScheme z = local_scheme(r.F, check.l);
  check.length = z.length;
  check.hilbert = z.hilbert;
  check.general = z.hilbert == kGeneralCubic;
  r.random_form = std::move(check);
  return r;
}

Polynomial random_cusp_input(std::uint64_t seed, std::uint64_t index) {
  Rng rng = trial_rng(seed, index);
  for (;;) {
    Polynomial f = random_form(rng, 3, 3);
    if (!f.coefficient({0, 0, 3}).is_zero()) return f;
  }
}

CuspTrials cusp_trials(std::uint64_t seed, std::size_t trials, int threads) {
  CuspTrials out;
  out.trials = trials;
  out.reports.resize(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < trials; k = next++)
      out.reports[k] = cusp_witness(random_cusp_input(seed, k), seed + k);
  };
  const unsigned count = std::max(1u, static_cast<unsigned>(threads > 0 ? threads : std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& r : out.reports) {
    out.general += r.general ? 1 : 0;
    out.max_lengthG = std::max(out.max_lengthG, r.lengthG);
    if (r.lengthG > 7 || !r.apolarOK || (r.general && r.lengthF != 8)) ++out.failures;
    if (r.random_form && r.random_form->general) {
      ++out.random_general;
      if (r.random_form->length != 8) ++out.random_failures;
    }
  }
  return out;
}

}  // namespace cactus
