#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "lpi/group_algebra/laurent.hpp"
#include "lpi/rings/ring.hpp"

namespace lpi {

enum class Letter : std::uint8_t { x = 0, y = 1 };

inline Letter other(Letter l) { return l == Letter::x ? Letter::y : Letter::x; }
inline char letter_char(Letter l) { return l == Letter::x ? 'x' : 'y'; }

// Basis word of F = R<x,y>/(x^2, y^2): letters alternate, so a word is
// determined by its length and first letter. The empty word is 1.
class AlternatingWord {
 public:
  AlternatingWord() = default;
  AlternatingWord(Letter first, std::uint32_t length) : first_(length ? first : Letter::x), length_(length) {}

  // Throws PreconditionError on a repeated adjacent letter or a non-{x,y} letter.
  static AlternatingWord from_letters(std::string_view letters);

  std::uint32_t length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  Letter first() const { return first_; }
  Letter last() const { return length_ % 2 ? first_ : other(first_); }

  // Product in F: nullopt when the junction letters coincide (x^2 or y^2).
  friend std::optional<AlternatingWord> operator*(const AlternatingWord& u, const AlternatingWord& v) {
    if (u.is_identity()) return v;
    if (v.is_identity()) return u;
    if (u.last() == v.first()) return std::nullopt;
    return AlternatingWord(u.first_, u.length_ + v.length_);
  }

  friend bool operator==(const AlternatingWord&, const AlternatingWord&) = default;
  // Length first, then lexicographic with x < y.
  friend std::strong_ordering operator<=>(const AlternatingWord& a, const AlternatingWord& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.first_ <=> b.first_;
  }

  // "x*y*x"; the empty word prints as "1".
  std::string str() const;
  std::string letters() const;

 private:
  Letter first_ = Letter::x;
  std::uint32_t length_ = 0;
};

template <Ring R>
class QuotientElement {
 public:
  using Element = ElementOf<R>;
  using Terms = std::map<AlternatingWord, Element>;

  explicit QuotientElement(R ring) : ring_(std::move(ring)) {}

  static QuotientElement constant(R ring, const Element& c) {
    QuotientElement e(std::move(ring));
    e.add_term(AlternatingWord(), c);
    return e;
  }
  static QuotientElement one(R ring) {
    auto c = ring.one();
    return constant(std::move(ring), c);
  }
  static QuotientElement letter(R ring, Letter l) {
    QuotientElement e(std::move(ring));
    e.add_term(AlternatingWord(l, 1), e.ring_.one());
    return e;
  }

  const R& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Element coefficient(const AlternatingWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  void add_term(const AlternatingWord& w, const Element& c) {
    if (!ring_.contains(c)) throw RingMismatch("coefficient outside " + ring_.name());
    if (is_zero_element(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second = it->second + c;
    if (is_zero_element(it->second)) terms_.erase(it);
  }

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
    require_same_ring(a.ring_, b.ring_);
    QuotientElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }
  friend QuotientElement operator-(const QuotientElement& a) {
    QuotientElement r(a.ring_);
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
    return r;
  }
  friend QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) { return a + (-b); }
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    require_same_ring(a.ring_, b.ring_);
    QuotientElement r(a.ring_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_)
        if (auto uv = u * v) r.add_term(*uv, cu * cv);
    return r;
  }
  QuotientElement scaled(const Element& c) const {
    QuotientElement r(ring_);
    for (const auto& [w, x] : terms_) r.add_term(w, c * x);
    return r;
  }

  friend bool operator==(const QuotientElement& a, const QuotientElement& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  // Canonical text: "1 + x + y + x*y".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
      std::string coeff = to_string(c);
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (out.empty()) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      if (w.is_identity()) out += coeff;
      else if (coeff == "1") out += w.str();
      else out += coeff + "*" + w.str();
    }
    return out;
  }

 private:
  R ring_;
  Terms terms_;
};

template <Ring R>
QuotientElement<R> q_multiply(const QuotientElement<R>& u, const QuotientElement<R>& v) {
  return u * v;
}

template <Ring R>
QuotientElement<R> q_power(const QuotientElement<R>& u, std::uint64_t k) {
  QuotientElement<R> acc = QuotientElement<R>::one(u.ring());
  for (std::uint64_t i = 0; i < k; ++i) {
    acc = acc * u;
    if (acc.is_zero()) break;
  }
  return acc;
}

// Elementary factor 1 + c*s with s a single letter; (c*s)^2 = 0 so its
// inverse is 1 - c*s.
template <Ring R>
struct ElementaryFactor {
  ElementOf<R> coefficient;
  Letter letter;
};

// A unit of F with a verified two-sided inverse.
template <Ring R>
class QuotientUnit {
 public:
  const QuotientElement<R>& value() const { return value_; }
  const QuotientElement<R>& inverse() const { return inverse_; }
  const std::vector<ElementaryFactor<R>>& factors() const { return factors_; }

  template <Ring S>
  friend QuotientUnit<S> q_unit(const S& ring, std::span<const ElementaryFactor<std::type_identity_t<S>>> factors);

 private:
  QuotientUnit(QuotientElement<R> value, QuotientElement<R> inverse, std::vector<ElementaryFactor<R>> factors)
      : value_(std::move(value)), inverse_(std::move(inverse)), factors_(std::move(factors)) {}

  QuotientElement<R> value_;
  QuotientElement<R> inverse_;
  std::vector<ElementaryFactor<R>> factors_;
};

// value = product of (1 + c s) in order; inverse = product of (1 - c s) reversed.
template <Ring S>
QuotientUnit<S> q_unit(const S& ring, std::span<const ElementaryFactor<std::type_identity_t<S>>> factors) {
  auto value = QuotientElement<S>::one(ring);
  auto inverse = QuotientElement<S>::one(ring);
  for (const auto& f : factors) {
    auto step = QuotientElement<S>::one(ring) + QuotientElement<S>::letter(ring, f.letter).scaled(f.coefficient);
    auto back = QuotientElement<S>::one(ring) - QuotientElement<S>::letter(ring, f.letter).scaled(f.coefficient);
    value = value * step;
    inverse = back * inverse;
  }
  auto one = QuotientElement<S>::one(ring);
  if (!(value * inverse == one) || !(inverse * value == one))
    throw InternalError("quotient unit certificate failed to verify");
  return QuotientUnit<S>(std::move(value), std::move(inverse), {factors.begin(), factors.end()});
}

// Recognizes elements of the certified form 1 + c*s (s a letter); anything
// else, such as 1 + x*y, is rejected.
template <Ring R>
ElementaryFactor<R> as_elementary_factor(const QuotientElement<R>& e) {
  const auto& ring = e.ring();
  if (e.size() != 2 || !(e.coefficient(AlternatingWord()) == ring.one()))
    throw PreconditionError("'" + e.str() + "' is not of the form 1 + c*x or 1 + c*y");
  for (Letter l : {Letter::x, Letter::y}) {
    auto c = e.coefficient(AlternatingWord(l, 1));
    if (!is_zero_element(c)) return {c, l};
  }
  throw PreconditionError("'" + e.str() + "' is not of the form 1 + c*x or 1 + c*y");
}

template <Ring R>
using QuotientArg = std::variant<QuotientElement<R>, QuotientUnit<R>>;

template <Ring R>
const QuotientElement<R>& value_of(const QuotientArg<R>& a) {
  if (const auto* u = std::get_if<QuotientUnit<R>>(&a)) return u->value();
  return std::get<QuotientElement<R>>(a);
}

// Substitutes quotient elements for the variables of a Laurent element.
// Negative exponents need a certified unit at that position.
template <Ring R>
QuotientElement<R> q_evaluate(const LaurentElement<R>& e, std::span<const QuotientArg<std::type_identity_t<R>>> args) {
  const R& ring = e.ring();
  QuotientElement<R> sum(ring);
  for (const auto& [w, c] : e.terms()) {
    auto acc = QuotientElement<R>::constant(ring, c);
    for (const auto& s : w.syllables()) {
      if (static_cast<std::size_t>(s.generator) > args.size())
        throw PreconditionError("variable x" + std::to_string(s.generator) + " is not assigned");
      const auto& arg = args[static_cast<std::size_t>(s.generator - 1)];
      require_same_ring(ring, value_of(arg).ring());
      if (s.exponent > 0) {
        acc = acc * q_power(value_of(arg), static_cast<std::uint64_t>(s.exponent));
      } else {
        const auto* unit = std::get_if<QuotientUnit<R>>(&arg);
        if (!unit)
          throw NotInvertible("x" + std::to_string(s.generator) + " has a negative exponent but no certified inverse");
        acc = acc * q_power(unit->inverse(), static_cast<std::uint64_t>(-s.exponent));
      }
      if (acc.is_zero()) break;
    }
    sum = sum + acc;
  }
  return sum;
}

}  // namespace lpi
