#pragma once

#include <json.hpp>

#include "bipoly.hpp"
#include "ratfunc.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace cmline {

// Canonical JSON renderings: rationals as "p/q" strings, polynomials as
// dense coefficient arrays (low degree first), bipolys as sorted
// [i, j, coeff] triples. Bit-exact and key-stable.

inline nlohmann::json to_json(const Rational& q) { return q.str(); }

inline nlohmann::json to_json(const UniPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
  return arr;
}

inline nlohmann::json to_json(const BiPoly& b) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, c] : b.terms())
    arr.push_back(nlohmann::json::array({key.first, key.second, c.str()}));
  return arr;
}

inline nlohmann::json to_json(const RationalFunctionEps& f) {
  return {{"numerator", to_json(f.num())}, {"denominator", to_json(f.den())}};
}

}  // namespace cmline
