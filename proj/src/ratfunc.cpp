#include "ratfunc.hpp"

#include "errors.hpp"

namespace cmline {

RationalFunctionEps::RationalFunctionEps(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::Precondition, "rational function with zero denominator");
  normalize();
}

void RationalFunctionEps::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(Rational(1));
    return;
  }
  UniPoly g = gcd_monic(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (lead != Rational(1)) {
    Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunctionEps::eval(const Rational& e) const {
  Rational d = den_.eval(e);
  if (d.is_zero()) fail(ErrorKind::Pole, "pole at eps = " + e.str());
  return num_.eval(e) / d;
}

Rational RationalFunctionEps::derivative_at_zero() const {
  Rational d0 = den_.eval(Rational(0));
  if (d0.is_zero()) fail(ErrorKind::Pole, "pole at eps = 0");
  Rational n0 = num_.eval(Rational(0));
  Rational dn0 = num_.derivative().eval(Rational(0));
  Rational dd0 = den_.derivative().eval(Rational(0));
  return (dn0 * d0 - n0 * dd0) / (d0 * d0);
}

RationalFunctionEps& RationalFunctionEps::operator+=(const RationalFunctionEps& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunctionEps& RationalFunctionEps::operator-=(const RationalFunctionEps& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunctionEps& RationalFunctionEps::operator*=(const RationalFunctionEps& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunctionEps& RationalFunctionEps::operator/=(const RationalFunctionEps& o) {
  if (o.num_.is_zero()) fail(ErrorKind::Precondition, "division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RationalFunctionEps RationalFunctionEps::operator-() const {
  RationalFunctionEps r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunctionEps::str() const {
  if (den_ == UniPoly(Rational(1))) return num_.str("eps");
  return "(" + num_.str("eps") + ") / (" + den_.str("eps") + ")";
}

}  // namespace cmline
