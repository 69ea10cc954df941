#include "cactus/sequences.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cactus {

int HilbertFunction::length() const { return std::accumulate(values.begin(), values.end(), 0); }

int HilbertFunction::operator()(int i) const {
  if (i < 0 || i >= static_cast<int>(values.size())) return 0;
  return values[static_cast<std::size_t>(i)];
}

bool HilbertFunction::is_valid() const {
  if (values.empty() || values.front() != 1 || values.back() != 1) return false;
  for (int v : values)
    if (v < 1) return false;
  return true;
}

SymmetricDecomposition SymmetricDecomposition::zero(int d) {
  SymmetricDecomposition s;
  s.d = d;
  const int rows = d >= 2 ? d - 1 : 1;
  s.deltas.assign(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(d + 1), 0));
  return s;
}

SymmetricDecomposition SymmetricDecomposition::trivial(const HilbertFunction& H) {
  SymmetricDecomposition s = zero(H.socle_degree());
  s.deltas[0] = H.values;
  return s;
}

int SymmetricDecomposition::operator()(int a, int i) const {
  if (a < 0 || a >= static_cast<int>(deltas.size()) || i < 0 || i > d) return 0;
  return deltas[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
}

std::vector<int> SymmetricDecomposition::partial_sum(int alpha) const {
  std::vector<int> out(static_cast<std::size_t>(d + 1), 0);
  for (int a = 0; a <= alpha && a < static_cast<int>(deltas.size()); ++a)
    for (int i = 0; i <= d; ++i) out[static_cast<std::size_t>(i)] += (*this)(a, i);
  return out;
}

HilbertFunction SymmetricDecomposition::total() const {
  return HilbertFunction{partial_sum(static_cast<int>(deltas.size()) - 1)};
}

bool SymmetricDecomposition::is_valid() const {
  if (d < 0 || deltas.empty()) return false;
  for (const auto& row : deltas)
    if (static_cast<int>(row.size()) != d + 1) return false;
  if ((*this)(0, 0) != 1 || (*this)(0, d) != 1) return false;
  for (int a = 0; a < static_cast<int>(deltas.size()); ++a) {
    if (a >= 1 && (*this)(a, 0) != 0) return false;
    for (int i = 0; i <= d; ++i) {
      const int v = (*this)(a, i);
      if (v < 0) return false;
      const int mirror = d - a - i;
      if (mirror < 0) {
        if (v != 0) return false;
      } else if (v != (*this)(a, mirror)) {
        return false;
      }
    }
  }
  return true;
}

std::string format_sequence(const std::vector<int>& values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ')';
  return os.str();
}

std::string format_compact(const HilbertFunction& H, const SymmetricDecomposition& delta) {
  std::string out = format_sequence(H.values) + " ->";
  bool first = true;
  for (int a = 0; a < static_cast<int>(delta.rows()); ++a) {
    const auto& row = delta.deltas[static_cast<std::size_t>(a)];
    bool nonzero = false;
    for (int v : row) nonzero = nonzero || v != 0;
    if (!nonzero) continue;
    const int last = delta.d - a;
    std::vector<int> trimmed(row.begin(), row.begin() + (last + 1));
    out += first ? " " : ",";
    out += format_sequence(trimmed);
    first = false;
  }
  return out;
}

namespace {

// Reads one parenthesised, comma-separated list starting at `pos`.
std::vector<int> read_group(std::string_view text, std::size_t& pos) {
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  const bool paren = pos < text.size() && text[pos] == '(';
  if (paren) ++pos;
  std::vector<int> out;
  for (;;) {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("expected a nonnegative integer at position " + std::to_string(pos));
    out.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (paren) {
    if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("missing ')' at position " + std::to_string(pos));
    ++pos;
  }
  return out;
}

}  // namespace

std::vector<int> parse_sequence(std::string_view text) {
  std::size_t pos = 0;
  auto out = read_group(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw std::invalid_argument("trailing characters after sequence");
  return out;
}

SymmetricDecomposition parse_compact(std::string_view text, HilbertFunction* H_out) {
  const auto arrow = text.find("->");
  if (arrow == std::string_view::npos) throw std::invalid_argument("expected 'H -> rows'");
  const HilbertFunction H{parse_sequence(text.substr(0, arrow))};
  const int d = H.socle_degree();
  if (d < 0) throw std::invalid_argument("empty Hilbert function");
  SymmetricDecomposition s = SymmetricDecomposition::zero(d);
  std::string_view rest = text.substr(arrow + 2);
  std::size_t pos = 0;
  for (;;) {
    auto row = read_group(rest, pos);
    const int a = d + 1 - static_cast<int>(row.size());
    if (a < 0 || a >= static_cast<int>(s.rows()))
      throw std::invalid_argument("row " + format_sequence(row) + " does not fit socle degree " + std::to_string(d));
    for (std::size_t i = 0; i < row.size(); ++i) s.deltas[static_cast<std::size_t>(a)][i] += row[i];
    while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
    if (pos >= rest.size()) break;
    if (rest[pos] != ',') throw std::invalid_argument("expected ',' between rows");
    ++pos;
  }
  if (s.total() != H) throw std::invalid_argument("rows do not sum to " + format_sequence(H.values));
  if (H_out) *H_out = H;
  return s;
}

}  // namespace cactus
