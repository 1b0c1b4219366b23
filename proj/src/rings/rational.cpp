#include "lpi/rings/rational.hpp"

#include "lpi/errors.hpp"

namespace lpi {

Rational::Rational(Integer numerator, Integer denominator) {
  if (denominator.is_zero()) throw PreconditionError("rational with zero denominator");
  if (denominator.sign() < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Integer g = gcd(numerator, denominator);
  num_ = divide_exact(numerator, g);
  den_ = divide_exact(denominator, g);
}

Rational Rational::reciprocal() const {
  if (num_.is_zero()) throw PreconditionError("reciprocal of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

}  // namespace lpi
