#include "rational.hpp"

#include <cctype>
#include <ostream>

#include "errors.hpp"

namespace cmline {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_ == 0) fail(ErrorKind::Precondition, "rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) fail(ErrorKind::Parse, "empty integer in rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  if (text[0] == '-') i = 1;
  if (i == text.size()) fail(ErrorKind::Parse, "bad rational literal '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      fail(ErrorKind::Parse, "bad rational literal '" + std::string(whole) + "'");
  return BigInt(std::string(text));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) fail(ErrorKind::Parse, "empty rational literal");
  std::size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  BigInt num = parse_integer(s.substr(0, slash), text);
  BigInt den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in rational '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) fail(ErrorKind::Precondition, "division by zero rational");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::pow(unsigned exp) const {
  Rational result(1);
  Rational base = *this;
  for (; exp != 0; exp >>= 1) {
    if (exp & 1u) result *= base;
    if (exp > 1) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

BigInt factorial(int n) {
  if (n < 0) fail(ErrorKind::Precondition, "factorial of negative integer");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0) fail(ErrorKind::Precondition, "binomial with negative arguments");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace cmline
