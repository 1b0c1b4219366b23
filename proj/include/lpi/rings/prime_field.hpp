#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lpi {

// Residue modulo a prime p < 2^31. The modulus travels with the value so
// that mixing residues of different fields is caught at run time.
class Zp {
 public:
  Zp(std::uint64_t value, std::uint32_t modulus)
      : value_(static_cast<std::uint32_t>(value % modulus)), modulus_(modulus) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  // Throws PreconditionError on zero.
  Zp inverse() const;
  Zp pow(std::uint64_t exponent) const;

  friend Zp operator+(Zp a, Zp b) {
    check_same(a, b);
    std::uint64_t s = std::uint64_t{a.value_} + b.value_;
    return Zp(s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_, Raw{});
  }
  friend Zp operator-(Zp a, Zp b) {
    check_same(a, b);
    return Zp(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_,
              a.modulus_, Raw{});
  }
  friend Zp operator*(Zp a, Zp b) {
    check_same(a, b);
    return Zp(std::uint64_t{a.value_} * b.value_ % a.modulus_, a.modulus_, Raw{});
  }
  friend Zp operator-(Zp a) { return Zp(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_, Raw{}); }

  friend bool operator==(Zp a, Zp b) {
    check_same(a, b);
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(Zp a, Zp b) {
    check_same(a, b);
    return a.value_ <=> b.value_;
  }

 private:
  struct Raw {};
  Zp(std::uint64_t value, std::uint32_t modulus, Raw)
      : value_(static_cast<std::uint32_t>(value)), modulus_(modulus) {}

  static void check_same(Zp a, Zp b) {
    if (a.modulus_ != b.modulus_) throw_mismatch(a.modulus_, b.modulus_);
  }
  [[noreturn]] static void throw_mismatch(std::uint32_t p, std::uint32_t q);

  std::uint32_t value_;
  std::uint32_t modulus_;
};

inline bool is_zero(Zp v) { return v.is_zero(); }
inline std::string to_string(Zp v) { return std::to_string(v.value()); }

// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n);

}  // namespace lpi
