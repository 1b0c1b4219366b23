#pragma once

#include <compare>
#include <string>

#include "lpi/rings/integer.hpp"

namespace lpi {

// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  // Throws PreconditionError on a zero denominator.
  Rational(Integer numerator, Integer denominator);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_integer() const { return den_ == Integer(1); }
  bool is_zero() const { return num_.is_zero(); }

  // Throws PreconditionError on zero.
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, Reduced{}); }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  std::string str() const { return is_integer() ? num_.str() : num_.str() + "/" + den_.str(); }

 private:
  struct Reduced {};
  Rational(Integer n, Integer d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

  Integer num_;
  Integer den_;
};

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace lpi
