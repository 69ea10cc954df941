#include "cactus/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cactus {

int total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Polynomial::Polynomial(std::size_t nvars, Side side) : nvars_(nvars), side_(side) {}

Polynomial Polynomial::constant(std::size_t nvars, Side side, const Scalar& c) {
  Polynomial p(nvars, side);
  p.add_term(ExponentVector(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Side side, ExponentVector exponents, const Scalar& c) {
  Polynomial p(exponents.size(), side);
  p.add_term(exponents, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, Side side, std::size_t var) {
  if (var >= nvars) throw std::out_of_range("variable index out of range");
  ExponentVector e(nvars, 0);
  e[var] = 1;
  return monomial(side, std::move(e));
}

int Polynomial::degree() const {
  if (terms_.empty()) return kDegreeOfZero;
  return total_degree(terms_.begin()->first);
}

int Polynomial::order() const {
  if (terms_.empty()) return kDegreeOfZero;
  return total_degree(terms_.rbegin()->first);
}

bool Polynomial::is_homogeneous() const { return degree() == order(); }

bool Polynomial::involves(std::size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] > 0) return true;
  return false;
}

Scalar Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

const ExponentVector& Polynomial::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::add_term(const ExponentVector& e, const Scalar& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector length does not match nvars");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (other.nvars_ != nvars_) throw std::invalid_argument("polynomials have different numbers of variables");
  if (other.side_ != side_) throw std::invalid_argument("cannot mix primal and dual polynomials");
}

void Polynomial::axpy(const Scalar& c, const Polynomial& other) {
  check_compatible(other);
  if (c.is_zero()) return;
  for (const auto& [e, v] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (inserted) {
      it->second *= c;
    } else {
      it->second += c * v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  axpy(Scalar(1), rhs);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  axpy(Scalar(-1), rhs);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  return r *= Scalar(-1);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.nvars_, a.side_);
  ExponentVector e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Scalar c = ca * cb;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (a.side_ == Side::primal && ea[i] > 0 && eb[i] > 0)
          c *= Scalar(mpq_class(binomial(e[i], ea[i])));
      }
      r.add_term(e, c);
    }
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.side_ == b.side_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::homogeneous_component(int i) const {
  Polynomial r(nvars_, side_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == i) r.terms_.emplace(e, c);
  return r;
}

Polynomial Polynomial::with_side(Side side) const {
  Polynomial r = *this;
  r.side_ = side;
  return r;
}

Polynomial Polynomial::extended(std::size_t extra) const {
  Polynomial r(nvars_ + extra, side_);
  for (const auto& [e, c] : terms_) {
    ExponentVector f = e;
    f.resize(nvars_ + extra, 0);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Polynomial Polynomial::restricted(std::size_t keep) const {
  if (keep > nvars_) throw std::invalid_argument("cannot restrict to more variables than present");
  Polynomial r(keep, side_);
  for (const auto& [e, c] : terms_) {
    bool survives = true;
    for (std::size_t i = keep; i < nvars_; ++i)
      if (e[i] != 0) survives = false;
    if (survives) r.add_term(ExponentVector(e.begin(), e.begin() + static_cast<long>(keep)), c);
  }
  return r;
}

std::string Polynomial::to_string(int index_base) const {
  if (terms_.empty()) return "0";
  const char letter = side_ == Side::primal ? 'x' : 'y';
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c.modulus() == 0 && sgn(c.value()) < 0;
    const Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant_term = total_degree(e) == 0;
    bool need_star = false;
    if (constant_term || !magnitude.is_one()) {
      os << magnitude;
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << letter << (static_cast<long>(i) + index_base);
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace cactus
