#pragma once

#include <utility>

#include "rational.hpp"
#include "unipoly.hpp"

namespace cmline {

/// Rational function of eps. Stored with coprime numerator and denominator
/// and monic denominator, so structural equality decides equality of
/// functions.
class RationalFunctionEps {
public:
  RationalFunctionEps() : den_(Rational(1)) {}
  RationalFunctionEps(UniPoly num, UniPoly den);

  static RationalFunctionEps from_poly(UniPoly p) {
    return RationalFunctionEps(std::move(p), UniPoly(Rational(1)));
  }

  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Exact value at e; Pole error when the denominator vanishes there.
  Rational eval(const Rational& e) const;

  Rational value_at_zero() const { return eval(Rational(0)); }

  /// Exact first derivative at eps = 0; Pole error when den(0) = 0.
  Rational derivative_at_zero() const;

  RationalFunctionEps& operator+=(const RationalFunctionEps& o);
  RationalFunctionEps& operator-=(const RationalFunctionEps& o);
  RationalFunctionEps& operator*=(const RationalFunctionEps& o);
  RationalFunctionEps& operator/=(const RationalFunctionEps& o);
  RationalFunctionEps operator-() const;

  friend RationalFunctionEps operator+(RationalFunctionEps a, const RationalFunctionEps& b) { return a += b; }
  friend RationalFunctionEps operator-(RationalFunctionEps a, const RationalFunctionEps& b) { return a -= b; }
  friend RationalFunctionEps operator*(RationalFunctionEps a, const RationalFunctionEps& b) { return a *= b; }
  friend RationalFunctionEps operator/(RationalFunctionEps a, const RationalFunctionEps& b) { return a /= b; }

  bool operator==(const RationalFunctionEps&) const = default;

  std::string str() const;

private:
  void normalize();

  UniPoly num_;
  UniPoly den_;
};

}  // namespace cmline
