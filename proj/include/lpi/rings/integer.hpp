#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lpi {

// Arbitrary-precision signed integer. Thin value wrapper over GMP.
class Integer {
 public:
  Integer() = default;
  Integer(int v) : value_(static_cast<long>(v)) {}
  Integer(long v) : value_(v) {}
  Integer(long long v) : value_(static_cast<long>(v)) {}
  Integer(unsigned v) : value_(static_cast<unsigned long>(v)) {}
  Integer(unsigned long v) : value_(v) {}
  Integer(unsigned long long v) : value_(static_cast<unsigned long>(v)) {}
  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  // Decimal with optional leading sign. Throws PreconditionError on junk.
  static Integer parse(std::string_view text);

  const mpz_class& mpz() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  std::optional<std::int64_t> to_int64() const;
  std::string str() const { return value_.get_str(); }

  Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
  Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
  Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.value_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

 private:
  mpz_class value_;
};

inline bool is_zero(const Integer& v) { return v.is_zero(); }
inline std::string to_string(const Integer& v) { return v.str(); }

Integer abs(const Integer& v);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, std::uint64_t exponent);
// Exact quotient; throws PreconditionError if divisor does not divide dividend.
Integer divide_exact(const Integer& dividend, const Integer& divisor);
// Floor-mod into [0, modulus).
std::uint64_t mod_u64(const Integer& v, std::uint64_t modulus);

}  // namespace lpi
