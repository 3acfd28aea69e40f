#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace cmline {

/// Dense univariate polynomial over Rational. The variable is positional
/// (k, r or eps depending on the mathematical context); trailing zero
/// coefficients are never stored, so degree() is the highest nonzero index,
/// with -1 for the zero polynomial.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(Rational constant);
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly variable();
  static UniPoly monomial(int exponent, Rational coeff);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Rational coeff(int i) const;  // zero outside the stored range
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;

  /// p(s*x) for a scalar s.
  UniPoly scale_variable(const Rational& s) const;

  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const;

  bool operator==(const UniPoly&) const = default;

  std::string str(std::string_view var) const;

private:
  void strip();

  std::vector<Rational> c_;
};

/// C(k, i) = k(k-1)...(k-i+1)/i! as a degree-i polynomial in k.
UniPoly binomial_poly(int i);

/// Coefficients c_0..c_d with p(k) = sum_i c_i * C(k, i), found by solving
/// the triangular system at k = 0..d and certified by re-evaluation at
/// k = d+1..2d+2 (mismatch is a hard error). Empty for the zero polynomial.
std::vector<Rational> to_binomial_basis(const UniPoly& p);

/// Quotient and remainder over Q; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly gcd_monic(UniPoly a, UniPoly b);

}  // namespace cmline
