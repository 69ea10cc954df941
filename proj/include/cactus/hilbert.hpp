#ifndef CACTUS_HILBERT_HPP
#define CACTUS_HILBERT_HPP

#include <cstddef>
#include <vector>

#include "cactus/apolar.hpp"
#include "cactus/ring.hpp"
#include "cactus/sequences.hpp"

namespace cactus {

/// H_f(i) = dim Diff(f)_i - dim Diff(f)_{i-1}, indexed by partial degree.
HilbertFunction hilbert_function(const Polynomial& f);
HilbertFunction hilbert_function(const FilteredSpace& space);

/// Delta_a(i) = dim(D_i^a) - dim(D_{i-1}^a + D_i^{a-1}) where D_i^a holds the
/// partials of degree <= i and order >= d - i - a. With P(k, i) = dim(O_k ∩
/// S_{<=i}) and k = d - a - i this is
///   P(k, i) - P(k+1, i) - P(k, i-1) + P(k+1, i-1).
SymmetricDecomposition symmetric_decomposition(const Polynomial& f);
SymmetricDecomposition symmetric_decomposition(const FilteredSpace& space);

/// n_i = sum_{j <= i} Delta_j(1) for i = 0 .. rows - 1.
std::vector<int> embedding_dims(const SymmetricDecomposition& delta);

struct AdaptedCoordinates {
  /// f rewritten in the new coordinates, unused trailing variables dropped.
  Polynomial f;
  /// z = M x on the original variables; the first `f.nvars()` z's are used.
  ChangeOfBasis change;
  /// Directions f does not involve at all; dropped.
  std::size_t removed = 0;
  /// Directions f involves that are not linear partials; kept after the
  /// flag variables.
  std::size_t hidden = 0;
  /// n_a = dim of the linear parts of partials of order >= d - 1 - a.
  std::vector<int> flag_dims;
};

/// Linear change of coordinates after which the degree-1 partials of order
/// >= d - 1 - a are spanned (modulo constants) by the first n_a variables.
/// Hidden variables follow the flag; unused variables are removed.
AdaptedCoordinates adapt_coordinates(const Polynomial& f);

}  // namespace cactus

#endif  // CACTUS_HILBERT_HPP
