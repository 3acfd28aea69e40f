#include "unipoly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cmline {

UniPoly::UniPoly(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

UniPoly UniPoly::variable() { return monomial(1, Rational(1)); }

UniPoly UniPoly::monomial(int exponent, Rational coeff) {
  if (exponent < 0) fail(ErrorKind::Precondition, "monomial with negative exponent");
  UniPoly p;
  if (coeff.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
  p.c_.back() = std::move(coeff);
  return p;
}

void UniPoly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::scale_variable(const Rational& s) const {
  std::vector<Rational> out(c_.size());
  Rational power(1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i] = c_[i] * power;
    power *= s;
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long long>(i));
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  strip();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& ci : c_) ci *= s;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& ci : p.c_) ci = -ci;
  return p;
}

std::string UniPoly::str(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += c_[i].sign() > 0 ? " + " : " - ";
    else if (c_[i].sign() < 0) out += "-";
    Rational abs = c_[i].sign() < 0 ? -c_[i] : c_[i];
    bool unit = abs == Rational(1) && i > 0;
    if (!unit) out += abs.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

UniPoly binomial_poly(int i) {
  if (i < 0) fail(ErrorKind::Precondition, "binomial_poly needs a non-negative index");
  UniPoly p(Rational(1));
  for (int j = 0; j < i; ++j) p *= UniPoly::variable() - UniPoly(Rational(j));
  return p * Rational(BigInt(1), factorial(i));
}

std::vector<Rational> to_binomial_basis(const UniPoly& p) {
  const int d = p.degree();
  if (d < 0) return {};
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int m = 0; m <= d; ++m) {
    Rational acc = p.eval(Rational(m));
    for (int i = 0; i < m; ++i) acc -= c[static_cast<std::size_t>(i)] * Rational(binomial(m, i));
    c[static_cast<std::size_t>(m)] = acc;
  }
  // Certify the fit beyond the interpolation points.
  for (int k = d + 1; k <= 2 * d + 2; ++k) {
    Rational rec(0);
    for (int i = 0; i <= d; ++i) rec += c[static_cast<std::size_t>(i)] * Rational(binomial(k, i));
    if (rec != p.eval(Rational(k)))
      fail(ErrorKind::Inconsistency, "binomial-basis fit failed re-verification at k=" + std::to_string(k));
  }
  return c;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorKind::Precondition, "polynomial division by zero");
  UniPoly rem = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree()) + 1 : 0,
                          Rational(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational factor = rem.leading() / b.leading();
    q[static_cast<std::size_t>(shift)] = factor;
    rem -= UniPoly::monomial(shift, factor) * b;
  }
  return {UniPoly(std::move(q)), std::move(rem)};
}

UniPoly gcd_monic(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading());
}

}  // namespace cmline
