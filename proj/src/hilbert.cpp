#include "cactus/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace cactus {

HilbertFunction hilbert_function(const FilteredSpace& space) {
  HilbertFunction H;
  for (int i = 0; i <= space.socle_degree(); ++i)
    H.values.push_back(static_cast<int>(space.dim(0, i) - space.dim(0, i - 1)));
  return H;
}

HilbertFunction hilbert_function(const Polynomial& f) { return hilbert_function(FilteredSpace(f)); }

SymmetricDecomposition symmetric_decomposition(const FilteredSpace& space) {
  const int d = space.socle_degree();
  auto P = [&](int k, int i) { return static_cast<long>(space.dim(k, i)); };
  auto entry = [&](int a, int i) {
    const int k = d - a - i;
    return static_cast<int>(P(k, i) - P(k + 1, i) - P(k, i - 1) + P(k + 1, i - 1));
  };
  SymmetricDecomposition out = SymmetricDecomposition::zero(d);
  for (int a = 0; a <= d; ++a) {
    for (int i = 0; i <= d; ++i) {
      const int v = entry(a, i);
      if (a < static_cast<int>(out.rows())) {
        out.deltas[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] = v;
      } else if (v != 0) {
        throw std::logic_error("symmetric_decomposition: nonzero row beyond d - 2");
      }
    }
  }
  return out;
}

SymmetricDecomposition symmetric_decomposition(const Polynomial& f) {
  return symmetric_decomposition(FilteredSpace(f));
}

std::vector<int> embedding_dims(const SymmetricDecomposition& delta) {
  std::vector<int> out;
  int acc = 0;
  for (int a = 0; a < static_cast<int>(delta.rows()); ++a) {
    acc += delta(a, 1);
    out.push_back(acc);
  }
  return out;
}

AdaptedCoordinates adapt_coordinates(const Polynomial& f) {
  const FilteredSpace space(f);
  const int d = space.socle_degree();
  const std::size_t n = f.nvars();

  EchelonBasis flag;
  ChangeOfBasis::Matrix m;
  auto coefficients = [n](const Polynomial& lin) {
    std::vector<Scalar> row(n);
    for (const auto& [e, c] : lin.terms())
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] == 1) row[i] = c;
    return row;
  };

  std::vector<int> flag_dims;
  for (int a = 0; a <= d - 1; ++a) {
    for (const auto& row : space.order_level(d - 1 - a).rows()) {
      if (row.degree() != 1) continue;
      Polynomial lin = flag.reduce(row.homogeneous_component(1));
      if (lin.is_zero()) continue;
      lin *= Scalar(1) / lin.leading_coefficient();
      flag.insert(lin);
      m.push_back(coefficients(lin));
    }
    if (a <= d - 2) flag_dims.push_back(static_cast<int>(flag.rank()));
  }

  const std::size_t used = m.size();
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial unit = Polynomial::variable(n, Side::primal, j);
    if (flag.insert(unit)) m.push_back(coefficients(unit));
  }

  // Completion directions that f still involves are hidden variables: keep
  // them right after the flag and drop the rest.
  const Polynomial probe = ChangeOfBasis(m).to_new(f);
  ChangeOfBasis::Matrix ordered(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(used));
  ChangeOfBasis::Matrix unused;
  for (std::size_t j = used; j < n; ++j) (probe.involves(j) ? ordered : unused).push_back(m[j]);
  const std::size_t kept = ordered.size();
  ordered.insert(ordered.end(), unused.begin(), unused.end());

  AdaptedCoordinates out{Polynomial(n, Side::primal), ChangeOfBasis(std::move(ordered)), n - kept, kept - used,
                         std::move(flag_dims)};
  out.f = out.change.to_new(f).restricted(std::max<std::size_t>(kept, 1));  // constants keep one variable
  return out;
}

}  // namespace cactus
