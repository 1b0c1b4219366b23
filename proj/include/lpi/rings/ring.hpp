#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "lpi/errors.hpp"
#include "lpi/rings/integer.hpp"
#include "lpi/rings/prime_field.hpp"
#include "lpi/rings/rational.hpp"

namespace lpi {

// A coefficient ring is a small descriptor object that knows how to build
// its constants; elements do their own arithmetic through operators.
template <class R>
concept Ring = std::equality_comparable<R> &&
    requires(const R& ring, const typename R::Element& a, const Integer& z) {
      { ring.zero() } -> std::same_as<typename R::Element>;
      { ring.one() } -> std::same_as<typename R::Element>;
      { ring.from_integer(z) } -> std::same_as<typename R::Element>;
      { ring.contains(a) } -> std::convertible_to<bool>;
      { ring.name() } -> std::convertible_to<std::string>;
      { a + a } -> std::same_as<typename R::Element>;
      { a - a } -> std::same_as<typename R::Element>;
      { a * a } -> std::same_as<typename R::Element>;
      { -a } -> std::same_as<typename R::Element>;
      { a == a } -> std::convertible_to<bool>;
      { is_zero(a) } -> std::convertible_to<bool>;
      { to_string(a) } -> std::convertible_to<std::string>;
    };

template <class R>
concept Field = Ring<R> && requires(const R& ring, const typename R::Element& a) {
  { ring.inverse(a) } -> std::same_as<typename R::Element>;
};

template <class R>
concept FiniteRing = Ring<R> && requires(const R& ring, std::uint64_t i, const typename R::Element& a) {
  { ring.order() } -> std::same_as<std::uint64_t>;
  { ring.element(i) } -> std::same_as<typename R::Element>;
  { ring.index_of(a) } -> std::same_as<std::uint64_t>;
};

template <Ring R>
using ElementOf = typename R::Element;

// Free-function spelling usable inside classes that have their own is_zero().
template <class E>
bool is_zero_element(const E& e) {
  return is_zero(e);
}

struct IntegerRing {
  using Element = Integer;

  Element zero() const { return Integer(0); }
  Element one() const { return Integer(1); }
  Element from_integer(const Integer& z) const { return z; }
  bool contains(const Element&) const { return true; }
  std::string name() const { return "ZZ"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

struct RationalField {
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_integer(const Integer& z) const { return Rational(z); }
  bool contains(const Element&) const { return true; }
  std::string name() const { return "QQ"; }
  Element inverse(const Element& a) const { return a.reciprocal(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

class PrimeField {
 public:
  using Element = Zp;

  // Throws PreconditionError unless p is a prime below 2^31.
  explicit PrimeField(std::uint64_t p) : p_(checked(p)) {}

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return Zp(0, p_); }
  Element one() const { return Zp(1, p_); }
  Element from_integer(const Integer& z) const { return Zp(mod_u64(z, p_), p_); }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return Zp(static_cast<std::uint64_t>(r < 0 ? r + p_ : r), p_);
  }
  bool contains(const Element& a) const { return a.modulus() == p_; }
  std::string name() const { return "Fp:" + std::to_string(p_); }
  Element inverse(const Element& a) const { return a.inverse(); }

  std::uint64_t order() const { return p_; }
  Element element(std::uint64_t index) const { return Zp(index, p_); }
  std::uint64_t index_of(const Element& a) const { return a.value(); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  static std::uint32_t checked(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw PreconditionError("modulus " + std::to_string(p) + " is not below 2^31");
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    return static_cast<std::uint32_t>(p);
  }

  std::uint32_t p_;
};

static_assert(Ring<IntegerRing>);
static_assert(Field<RationalField>);
static_assert(Field<PrimeField> && FiniteRing<PrimeField>);

// Canonical embedding From -> To. Integers embed everywhere; otherwise the
// two rings must coincide.
template <Ring From, Ring To>
ElementOf<To> embed(const From& from, const To& to, const ElementOf<From>& value) {
  if constexpr (std::same_as<From, IntegerRing>) {
    return to.from_integer(value);
  } else if constexpr (std::same_as<From, To>) {
    if (!(from == to)) throw RingMismatch("no embedding from " + from.name() + " into " + to.name());
    return value;
  } else if constexpr (std::same_as<To, RationalField> && std::same_as<From, IntegerRing>) {
    return Rational(value);
  } else {
    throw RingMismatch("no embedding from " + from.name() + " into " + to.name());
  }
}

template <Ring R>
void require_same_ring(const R& a, const R& b) {
  if (!(a == b)) throw RingMismatch("ring mismatch: " + a.name() + " vs " + b.name());
}

template <Ring R>
ElementOf<R> power(const R& ring, ElementOf<R> base, std::uint64_t exponent) {
  auto result = ring.one();
  while (exponent != 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

// Runtime choice between the two rings the user can name: `ZZ` or `Fp:<p>`.
using AnyRing = std::variant<IntegerRing, PrimeField>;

// Throws PreconditionError with a diagnostic on anything else.
AnyRing parse_ring(const std::string& text);
std::string ring_name(const AnyRing& ring);

}  // namespace lpi
