#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpi/rings/ring.hpp"

namespace lpi {

// Degree of a univariate polynomial. The zero polynomial has degree -inf,
// which compares below every finite degree and absorbs under addition.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  static Degree finite(std::size_t d) { return Degree(d); }

  bool is_neg_infinity() const { return !value_; }
  std::size_t value() const {
    if (!value_) throw PreconditionError("degree of the zero polynomial is -inf");
    return *value_;
  }

  friend Degree operator+(Degree a, Degree b) {
    if (!a.value_ || !b.value_) return Degree();
    return Degree(*a.value_ + *b.value_);
  }
  friend bool operator==(Degree, Degree) = default;
  friend std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }

  std::string str() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  Degree() = default;
  explicit Degree(std::size_t d) : value_(d) {}
  std::optional<std::size_t> value_;
};

// Dense univariate polynomial; coefficient i multiplies X^i. Trailing zeros
// are trimmed so the zero polynomial is the empty sequence.
template <Ring R>
class UniPoly {
 public:
  using Element = ElementOf<R>;

  explicit UniPoly(R ring) : ring_(std::move(ring)) {}
  UniPoly(R ring, std::vector<Element> coefficients) : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_)
      if (!ring_.contains(c)) throw RingMismatch("coefficient outside " + ring_.name());
    trim();
  }

  static UniPoly constant(R ring, Element c) { return UniPoly(std::move(ring), {std::move(c)}); }
  static UniPoly monomial(R ring, std::size_t degree, Element c) {
    std::vector<Element> v(degree + 1, ring.zero());
    v[degree] = std::move(c);
    return UniPoly(std::move(ring), std::move(v));
  }
  // X^high - X^low
  static UniPoly binomial_difference(R ring, std::size_t high, std::size_t low) {
    std::vector<Element> v(std::max(high, low) + 1, ring.zero());
    v[high] = v[high] + ring.one();
    v[low] = v[low] - ring.one();
    return UniPoly(std::move(ring), std::move(v));
  }

  const R& ring() const { return ring_; }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const { return coeffs_.empty() ? Degree::neg_infinity() : Degree::finite(coeffs_.size() - 1); }
  Element coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_.zero(); }
  const Element& leading() const {
    if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Element> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ring_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = v[i] + a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
    return UniPoly(a.ring_, std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<Element> v;
    v.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) v.push_back(-c);
    return UniPoly(a.ring_, std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.ring_);
    std::vector<Element> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(a.ring_, std::move(v));
  }
  UniPoly scaled(const Element& c) const {
    std::vector<Element> v;
    v.reserve(coeffs_.size());
    for (const auto& x : coeffs_) v.push_back(c * x);
    return UniPoly(ring_, std::move(v));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_; }

  // Horner evaluation at a scalar of the same ring.
  Element operator()(const Element& x) const {
    Element acc = ring_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  template <Ring To>
  UniPoly<To> mapped(const To& to) const {
    std::vector<ElementOf<To>> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(embed(ring_, to, c));
    return UniPoly<To>(to, std::move(v));
  }

  // Human form, highest degree first: "X^2 - X + 3".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      if (is_zero_element(coeffs_[k])) continue;
      std::string c = to_string(coeffs_[k]);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono = k == 0 ? "" : (k == 1 ? "X" : "X^" + std::to_string(k));
      if (mono.empty()) out += c;
      else if (c == "1") out += mono;
      else out += c + "*" + mono;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_element(coeffs_.back())) coeffs_.pop_back();
  }

  R ring_;
  std::vector<Element> coeffs_;
};

// Division with remainder over a field: a = q*b + r, deg r < deg b.
template <Field R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const UniPoly<R>& a, const UniPoly<R>& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const R& ring = a.ring();
  auto lead_inv = ring.inverse(b.leading());
  std::vector<ElementOf<R>> rem = a.coefficients();
  std::size_t db = b.coefficients().size() - 1;
  std::vector<ElementOf<R>> quo(rem.size() > db ? rem.size() - db : 0, ring.zero());
  for (std::size_t k = rem.size(); k-- > db;) {
    if (is_zero_element(rem[k])) continue;
    auto c = rem[k] * lead_inv;
    quo[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - c * b.coefficients()[j];
  }
  return {UniPoly<R>(ring, std::move(quo)), UniPoly<R>(ring, std::move(rem))};
}

template <Field R>
UniPoly<R> make_monic(const UniPoly<R>& p) {
  return p.scaled(p.ring().inverse(p.leading()));
}

}  // namespace lpi
