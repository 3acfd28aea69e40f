#pragma once

#include <map>
#include <string>
#include <utility>

#include "rational.hpp"
#include "unipoly.hpp"

namespace cmline {

/// Sparse exact polynomial in the two variables (k, r); no zero coefficient
/// is ever stored. Keys are exponent pairs (i, j) for k^i r^j.
class BiPoly {
public:
  using Key = std::pair<int, int>;

  BiPoly() = default;

  static BiPoly monomial(int i, int j, Rational c);
  static BiPoly from_k(const UniPoly& p);  // p read as a polynomial in k
  static BiPoly from_r(const UniPoly& p);  // p read as a polynomial in r

  bool is_zero() const noexcept { return t_.empty(); }
  Rational coefficient(int i, int j) const;
  const std::map<Key, Rational>& terms() const noexcept { return t_; }

  /// Coefficient of k^i, collected as a polynomial in r.
  UniPoly slice_k(int i) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

  bool operator==(const BiPoly&) const = default;

  std::string str() const;

private:
  void add_term(const Key& key, const Rational& c);

  std::map<Key, Rational> t_;
};

/// Substitution k -> k*r: maps p(k) to p(kr), which has only diagonal
/// terms (i, i).
BiPoly compose_scale(const UniPoly& p);

}  // namespace cmline
