#include "blowup/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace blowup {

namespace {

std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("rational overflow");
  return r;
}

std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("rational overflow");
  return r;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw std::domain_error("zero denominator");
  if (den < 0) {
    num = mul(num, -1);
    den = mul(den, -1);
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = mul(num_, -1);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t lhs = mul(num_, o.den_ / g);
  std::int64_t rhs = mul(o.num_, den_ / g);
  *this = Rational(add(lhs, rhs), mul(den_ / g, o.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  std::int64_t g1 = std::gcd(num_, o.den_);
  std::int64_t g2 = std::gcd(o.num_, den_);
  if (g1 == 0)
    g1 = 1;
  if (g2 == 0)
    g2 = 1;
  *this = Rational(mul(num_ / g1, o.num_ / g2), mul(den_ / g2, o.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0)
    throw std::domain_error("division by zero");
  return *this *= Rational(o.den_, o.num_);
}

bool operator<(const Rational& x, const Rational& y) {
  return mul(x.num_, y.den_) < mul(y.num_, x.den_);
}

std::string Rational::str() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace blowup
