#ifndef CACTUS_SEQUENCES_HPP
#define CACTUS_SEQUENCES_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cactus {

/// Values (H(0), ..., H(d)) of a Hilbert function; d is the socle degree.
struct HilbertFunction {
  std::vector<int> values;

  int socle_degree() const { return static_cast<int>(values.size()) - 1; }
  int length() const;
  int operator()(int i) const;  // 0 outside 0..d
  /// H(0) = H(d) = 1 and every value >= 1.
  bool is_valid() const;

  auto operator<=>(const HilbertFunction&) const = default;
};

/// Symmetric decomposition H = sum_a Delta_a.
///
/// `deltas[a]` has length d + 1 for a = 0 .. max(d - 2, 0); Delta_a is
/// symmetric about (d - a) / 2 and vanishes beyond index d - a.
struct SymmetricDecomposition {
  int d = 0;
  std::vector<std::vector<int>> deltas;

  static SymmetricDecomposition zero(int d);
  /// Single row Delta_0 = H (the decomposition of a graded algebra).
  static SymmetricDecomposition trivial(const HilbertFunction& H);

  int operator()(int a, int i) const;  // 0 outside the table
  std::size_t rows() const { return deltas.size(); }
  /// sum_{a <= alpha} Delta_a.
  std::vector<int> partial_sum(int alpha) const;
  HilbertFunction total() const;
  /// Every structural invariant: symmetry, nonnegativity, Delta_0(0) =
  /// Delta_0(d) = 1 and Delta_a(0) = 0 for a >= 1.
  bool is_valid() const;

  auto operator<=>(const SymmetricDecomposition&) const = default;
};

/// "(1,2,2,1)".
std::string format_sequence(const std::vector<int>& values);
/// "(1,4,5,4,1,1,1) -> (1,1,1,1,1,1,1),(0,3,4,3,0)": nonzero rows trimmed to
/// indices 0..d-a.
std::string format_compact(const HilbertFunction& H, const SymmetricDecomposition& delta);

/// Reads "(1,2,2,1)" (parentheses optional). Throws std::invalid_argument.
std::vector<int> parse_sequence(std::string_view text);
/// Reads the compact notation back; each row is placed by its length.
SymmetricDecomposition parse_compact(std::string_view text, HilbertFunction* H_out = nullptr);

}  // namespace cactus

#endif  // CACTUS_SEQUENCES_HPP
