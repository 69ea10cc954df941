#include "cactus/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

namespace cactus {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, Side side, ParseOptions options)
      : text_(text), nvars_(nvars), side_(side), options_(options) {}

  Polynomial run() {
    Polynomial result(nvars_, side_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Polynomial t = term();
      if (negative) t *= Scalar(-1);
      result += t;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar make_scalar(const mpz_class& num, const mpz_class& den) const {
    Scalar s = Scalar::rational(num, den);
    return options_.modulus == 0 ? s : s.in_field(options_.modulus);
  }

  Polynomial term() {
    skip_space();
    if (at_end()) fail("expected a term");
    Scalar coeff(1);
    ExponentVector e(nvars_, 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const mpz_class num = integer();
      mpz_class den = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        den = integer();
        if (den == 0) throw ParseError("division by zero in coefficient", den_pos);
      }
      coeff = make_scalar(num, den);
      need_factor = false;
    }
    for (;;) {
      skip_space();
      if (!need_factor) {
        if (at_end() || peek() != '*') break;
        ++pos_;
        skip_space();
      }
      factor(e);
      need_factor = false;
    }
    Polynomial p(nvars_, side_);
    p.add_term(e, coeff);
    return p;
  }

  void factor(ExponentVector& e) {
    if (at_end()) fail("expected a variable");
    const char expected = side_ == Side::primal ? 'x' : 'y';
    const char c = peek();
    if (c != 'x' && c != 'y') fail(std::string("expected a variable, found '") + c + "'");
    if (c != expected)
      fail(std::string("variable '") + c + "' does not match the " +
           (side_ == Side::primal ? "primal (x)" : "dual (y)") + " side");
    const std::size_t var_pos = pos_;
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
    const mpz_class index = integer();
    const mpz_class slot = index - options_.index_base;
    if (slot < 0 || slot >= static_cast<unsigned long>(nvars_))
      throw ParseError("variable index " + index.get_str() + " out of range", var_pos);
    int power = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      const mpz_class p = integer();
      if (p > 1000) fail("exponent too large");
      power = static_cast<int>(p.get_si());
    }
    e[slot.get_ui()] += power;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
  Side side_;
  ParseOptions options_;
};

using Matrix = ChangeOfBasis::Matrix;

Matrix transpose(const Matrix& m) {
  Matrix t(m.empty() ? 0 : m[0].size(), std::vector<Scalar>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Matrix invert(const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("change of basis matrix must be square");
  Matrix a = m;
  Matrix inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw std::invalid_argument("change of basis matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Scalar scale = Scalar(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// All exponent vectors of length n and total degree k.
void compositions(std::size_t n, int k, ExponentVector& cur, std::size_t at, std::vector<ExponentVector>& out) {
  if (at + 1 == n) {
    cur[at] = k;
    out.push_back(cur);
    return;
  }
  for (int v = k; v >= 0; --v) {
    cur[at] = v;
    compositions(n, k - v, cur, at + 1, out);
  }
  cur[at] = 0;
}

// (sum_j a_j z_j)^[k] = sum_{|g|=k} a^g z^[g] in the divided-power ring.
Polynomial divided_power_of_linear(const std::vector<Scalar>& a, int k) {
  const std::size_t n = a.size();
  Polynomial r(n, Side::primal);
  std::vector<ExponentVector> exps;
  ExponentVector cur(n, 0);
  compositions(n, k, cur, 0, exps);
  for (const auto& g : exps) {
    Scalar c(1);
    bool zero = false;
    for (std::size_t j = 0; j < n && !zero; ++j) {
      if (g[j] == 0) continue;
      if (a[j].is_zero()) {
        zero = true;
        break;
      }
      for (int t = 0; t < g[j]; ++t) c *= a[j];
    }
    if (!zero) r.add_term(g, c);
  }
  return r;
}

Polynomial linear_form(const std::vector<Scalar>& a, Side side) {
  Polynomial r(a.size(), side);
  for (std::size_t j = 0; j < a.size(); ++j) {
    ExponentVector e(a.size(), 0);
    e[j] = 1;
    r.add_term(e, a[j]);
  }
  return r;
}

void check_square(const Matrix& a, std::size_t n) {
  if (a.size() != n) throw std::invalid_argument("substitution matrix does not match nvars");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("substitution matrix must be square");
}

}  // namespace

Polynomial parse(std::string_view text, std::size_t nvars, Side side, ParseOptions options) {
  if (nvars == 0) throw std::invalid_argument("nvars must be positive");
  return Parser(text, nvars, side, options).run();
}

Polynomial contract(const Polynomial& psi, const Polynomial& f) {
  if (psi.nvars() != f.nvars()) throw std::invalid_argument("contract: nvars mismatch");
  if (psi.side() != Side::dual || f.side() != Side::primal)
    throw std::invalid_argument("contract: expects a dual operator and a primal polynomial");
  Polynomial r(f.nvars(), Side::primal);
  ExponentVector diff(f.nvars());
  for (const auto& [a, ca] : psi.terms()) {
    for (const auto& [b, cb] : f.terms()) {
      bool divides = true;
      for (std::size_t i = 0; i < diff.size(); ++i) {
        diff[i] = b[i] - a[i];
        if (diff[i] < 0) {
          divides = false;
          break;
        }
      }
      if (divides) r.add_term(diff, ca * cb);
    }
  }
  return r;
}

Polynomial tail(const Polynomial& f, int d) {
  if (d < 0) throw std::invalid_argument("tail: degree must be nonnegative");
  Polynomial r(f.nvars(), f.side());
  for (const auto& [e, c] : f.terms())
    if (total_degree(e) <= d) r.add_term(e, c);
  return r;
}

Polynomial substitute_linear_primal(const Polynomial& f, const Matrix& a) {
  const std::size_t n = f.nvars();
  check_square(a, n);
  std::map<std::pair<std::size_t, int>, Polynomial> cache;
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto it = cache.find({i, k});
    if (it == cache.end()) it = cache.emplace(std::make_pair(i, k), divided_power_of_linear(a[i], k)).first;
    return it->second;
  };
  Polynomial r(n, Side::primal);
  for (const auto& [e, c] : f.terms()) {
    Polynomial acc = Polynomial::constant(n, Side::primal, c);
    for (std::size_t i = 0; i < n && !acc.is_zero(); ++i)
      if (e[i] > 0) acc = acc * power(i, e[i]);
    r += acc;
  }
  return r;
}

Polynomial substitute_linear_dual(const Polynomial& psi, const Matrix& a) {
  const std::size_t n = psi.nvars();
  check_square(a, n);
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(linear_form(a[i], Side::dual));
  Polynomial r(n, Side::dual);
  for (const auto& [e, c] : psi.terms()) {
    Polynomial acc = Polynomial::constant(n, Side::dual, c);
    for (std::size_t i = 0; i < n; ++i)
      for (int t = 0; t < e[i]; ++t) acc = acc * images[i];
    r += acc;
  }
  return r;
}

ChangeOfBasis::ChangeOfBasis(Matrix forward) : forward_(std::move(forward)), inverse_(invert(forward_)) {}

ChangeOfBasis ChangeOfBasis::identity(std::size_t n) {
  Matrix m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return ChangeOfBasis(std::move(m));
}

bool ChangeOfBasis::is_identity() const {
  for (std::size_t i = 0; i < forward_.size(); ++i)
    for (std::size_t j = 0; j < forward_.size(); ++j)
      if (!(forward_[i][j] == Scalar(i == j ? 1 : 0))) return false;
  return true;
}

Polynomial ChangeOfBasis::to_new(const Polynomial& f) const { return substitute_linear_primal(f, inverse_); }

Polynomial ChangeOfBasis::to_original(const Polynomial& f) const { return substitute_linear_primal(f, forward_); }

Polynomial ChangeOfBasis::dual_to_new(const Polynomial& psi) const {
  return substitute_linear_dual(psi, transpose(forward_));
}

Polynomial ChangeOfBasis::dual_to_original(const Polynomial& psi) const {
  return substitute_linear_dual(psi, transpose(inverse_));
}

std::vector<std::string> ChangeOfBasis::describe(int index_base) const {
  std::vector<std::string> out;
  for (const auto& row : forward_) out.push_back(linear_form(row, Side::primal).to_string(index_base));
  return out;
}

Dehomogenized dehomogenize(const Polynomial& F, const Polynomial& l) {
  if (F.side() != Side::primal || l.side() != Side::primal)
    throw std::invalid_argument("dehomogenize: expects primal polynomials");
  if (F.nvars() != l.nvars()) throw std::invalid_argument("dehomogenize: nvars mismatch");
  if (F.nvars() < 2) throw std::invalid_argument("dehomogenize: need at least two variables");
  if (l.is_zero()) throw std::invalid_argument("dehomogenize: linear form is zero");
  if (l.degree() != 1 || !l.is_homogeneous()) throw std::invalid_argument("dehomogenize: l is not a linear form");
  if (!F.is_zero() && !F.is_homogeneous()) throw std::invalid_argument("dehomogenize: F is not homogeneous");

  const std::size_t n = F.nvars();
  std::vector<Scalar> lcoeff(n);
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector e(n, 0);
    e[i] = 1;
    lcoeff[i] = l.coefficient(e);
    if (pivot == n && !lcoeff[i].is_zero()) pivot = i;
  }
  Matrix m;
  m.push_back(lcoeff);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == pivot) continue;
    std::vector<Scalar> row(n);
    row[j] = Scalar(1);
    m.push_back(std::move(row));
  }
  ChangeOfBasis change(std::move(m));
  const Polynomial in_new = change.is_identity() ? F : change.to_new(F);

  Polynomial f(n - 1, Side::primal);
  for (const auto& [e, c] : in_new.terms()) f.add_term(ExponentVector(e.begin() + 1, e.end()), c);
  return {std::move(f), std::move(change)};
}

Polynomial homogenize(const Polynomial& g, int d) {
  if (g.side() != Side::primal) throw std::invalid_argument("homogenize: expects a primal polynomial");
  if (d < g.degree()) throw std::invalid_argument("homogenize: target degree below deg g");
  if (d < 0) throw std::invalid_argument("homogenize: negative target degree");
  Polynomial G(g.nvars() + 1, Side::primal);
  for (const auto& [e, c] : g.terms()) {
    ExponentVector h;
    h.reserve(e.size() + 1);
    h.push_back(d - total_degree(e));
    h.insert(h.end(), e.begin(), e.end());
    G.add_term(h, c);
  }
  return G;
}

Polynomial dehomogenize_dual(const Polynomial& Psi) {
  if (Psi.side() != Side::dual) throw std::invalid_argument("dehomogenize_dual: expects a dual polynomial");
  if (Psi.nvars() < 2) throw std::invalid_argument("dehomogenize_dual: need at least two variables");
  Polynomial r(Psi.nvars() - 1, Side::dual);
  for (const auto& [e, c] : Psi.terms()) r.add_term(ExponentVector(e.begin() + 1, e.end()), c);
  return r;
}

Polynomial homogenize_dual(const Polynomial& psi, int d) {
  if (psi.side() != Side::dual) throw std::invalid_argument("homogenize_dual: expects a dual polynomial");
  const int target = d == kDegreeOfZero ? std::max(psi.degree(), 0) : d;
  if (target < psi.degree()) throw std::invalid_argument("homogenize_dual: target degree below deg psi");
  Polynomial r(psi.nvars() + 1, Side::dual);
  for (const auto& [e, c] : psi.terms()) {
    ExponentVector h;
    h.reserve(e.size() + 1);
    h.push_back(target - total_degree(e));
    h.insert(h.end(), e.begin(), e.end());
    r.add_term(h, c);
  }
  return r;
}

}  // namespace cactus
