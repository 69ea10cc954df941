// Independent reference implementations used to cross-check the library.
// Nothing here calls EchelonBasis, contract() or the library's search code.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "cactus/enumerate.hpp"
#include "cactus/polynomial.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;
using Matrix = std::vector<Row>;

std::size_t rank(Matrix m);
/// Basis of {sum c_r rows[r] : sum c_r rows[r][j] = 0 for every j in `killed`}.
Matrix combinations_vanishing_on(const Matrix& rows, const std::vector<std::size_t>& killed);

/// Dense coordinates over the monomials of degree <= D in n variables.
struct MonomialIndex {
  MonomialIndex(std::size_t n, int D);
  std::vector<cactus::ExponentVector> monomials;
  std::map<cactus::ExponentVector, std::size_t> position;
  std::vector<std::size_t> above(int i) const;  // coordinates of degree > i
};

/// Rows y^a(f) for every monomial a with min_order <= |a| <= deg f, by exponent shifting.
Matrix partials(const cactus::Polynomial& f, const MonomialIndex& idx, int min_order = 0);

std::size_t diff_dimension(const cactus::Polynomial& f);
std::vector<int> hilbert(const cactus::Polynomial& f);
/// dim(O_k ∩ S_<=i) - dim(O_{k+1} ∩ S_<=i + O_k ∩ S_<=i-1), k = d - a - i, with
/// O_k spanned directly by contractions of order >= k.
std::vector<std::vector<int>> decomposition(const cactus::Polynomial& f);
/// dim of the kernel of contraction on dual polynomials of degree <= D.
std::size_t annihilator_dimension(const cactus::Polynomial& f, int D);

/// x^[a] -> x^a / a!  (stored on the dual side, which multiplies ordinarily).
cactus::Polynomial to_ordinary(const cactus::Polynomial& f);
cactus::Polynomial from_ordinary(const cactus::Polynomial& g);
/// Ordinary substitution x_i = sum_j a[i][j] z_j performed on the
/// ordinary form of a divided-power polynomial.
cactus::Polynomial substitute(const cactus::Polynomial& f, const std::vector<std::vector<mpq_class>>& a);

/// Every admissible candidate for (l, n), found by trying all symmetric
/// tables with entries bounded by min(H(i), H(mirror)) and filtering.
std::vector<cactus::DecompositionCandidate> brute_force_candidates(int l, int n);

/// All strictly decreasing expansions sum C(m_k, k) = value, k from i down.
std::vector<std::vector<std::pair<std::int64_t, int>>> all_expansions(std::int64_t value, int i);
/// Degree-(i+1) monomials all of whose degree-i divisors are among the
/// `value` lex-smallest degree-i monomials in enough variables.
std::int64_t lex_segment_bound(std::int64_t value, int i);

}  // namespace oracle
