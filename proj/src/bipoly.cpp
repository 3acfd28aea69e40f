#include "bipoly.hpp"

namespace cmline {

BiPoly BiPoly::monomial(int i, int j, Rational c) {
  BiPoly p;
  if (!c.is_zero()) p.t_.emplace(Key{i, j}, std::move(c));
  return p;
}

BiPoly BiPoly::from_k(const UniPoly& p) {
  BiPoly out;
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coeff(i);
    if (!c.is_zero()) out.t_.emplace(Key{i, 0}, std::move(c));
  }
  return out;
}

BiPoly BiPoly::from_r(const UniPoly& p) {
  BiPoly out;
  for (int j = 0; j <= p.degree(); ++j) {
    Rational c = p.coeff(j);
    if (!c.is_zero()) out.t_.emplace(Key{0, j}, std::move(c));
  }
  return out;
}

Rational BiPoly::coefficient(int i, int j) const {
  auto it = t_.find(Key{i, j});
  return it == t_.end() ? Rational(0) : it->second;
}

UniPoly BiPoly::slice_k(int i) const {
  std::vector<Rational> coeffs;
  for (const auto& [key, c] : t_) {
    if (key.first != i) continue;
    if (static_cast<std::size_t>(key.second) >= coeffs.size())
      coeffs.resize(static_cast<std::size_t>(key.second) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(key.second)] = c;
  }
  return UniPoly(std::move(coeffs));
}

void BiPoly::add_term(const Key& key, const Rational& c) {
  auto [it, inserted] = t_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [key, c] : o.t_) add_term(key, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [key, c] : o.t_) add_term(key, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : t_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    if (key.first > 0) out += "*k" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0) out += "*r" + (key.second > 1 ? "^" + std::to_string(key.second) : "");
  }
  return out;
}

BiPoly compose_scale(const UniPoly& p) {
  BiPoly out;
  for (int i = 0; i <= p.degree(); ++i) {
    Rational c = p.coeff(i);
    if (!c.is_zero()) out += BiPoly::monomial(i, i, c);
  }
  return out;
}

}  // namespace cmline
