#ifndef CACTUS_ECHELON_HPP
#define CACTUS_ECHELON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cactus/polynomial.hpp"

namespace cactus {

/// Exact echelon basis of a space of polynomials.
///
/// Each stored row has a distinct leading monomial (its pivot, the
/// GrlexGreater-largest term) with coefficient 1. Because rows are keyed by
/// their highest-degree term, the rows whose pivot has degree <= i span the
/// intersection of the space with polynomials of degree <= i.
class EchelonBasis {
 public:
  EchelonBasis() = default;

  /// Reduces `v` against the basis and stores the remainder if nonzero.
  /// Returns true when the rank grew.
  bool insert(const Polynomial& v);
  /// Remainder of `v` after eliminating every pivot monomial.
  Polynomial reduce(Polynomial v) const;
  bool contains(const Polynomial& v) const { return reduce(v).is_zero(); }

  std::size_t rank() const { return rows_.size(); }
  /// Number of rows whose pivot has total degree <= i.
  std::size_t rank_up_to_degree(int i) const;

  /// Reduced row echelon form, largest pivot first: every pivot monomial
  /// occurs in exactly one row.
  std::vector<Polynomial> reduced_rows() const;
  /// Rows as stored (echelon, not necessarily reduced), largest pivot first.
  std::vector<Polynomial> rows() const;

 private:
  std::map<ExponentVector, Polynomial, GrlexGreater> rows_;
};

/// Row reduction that records, for every inserted vector, the combination of
/// earlier inputs it reduces to. Inputs whose image reduces to zero yield
/// kernel elements.
class KernelTracker {
 public:
  /// Adds `image` with bookkeeping label `label`. If `image` lies in the span
  /// of earlier images, returns the label combination mapping to zero.
  std::optional<Polynomial> insert(const Polynomial& image, const Polynomial& label);
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Polynomial image;
    Polynomial label;
  };
  std::map<ExponentVector, Row, GrlexGreater> rows_;
};

}  // namespace cactus

#endif  // CACTUS_ECHELON_HPP
