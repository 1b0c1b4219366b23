#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "lpi/freegroup/free_word.hpp"
#include "lpi/rings/ring.hpp"

namespace lpi {

// Element of the group algebra R F_l: finite sum of coefficients times
// reduced words, kept in canonical word order with no zero coefficients.
template <Ring R>
class LaurentElement {
 public:
  using Element = ElementOf<R>;
  using Terms = std::map<FreeWord, Element>;

  explicit LaurentElement(R ring) : ring_(std::move(ring)) {}

  static LaurentElement constant(R ring, const Element& c) { return monomial(std::move(ring), FreeWord(), c); }
  static LaurentElement monomial(R ring, FreeWord w, const Element& c) {
    LaurentElement e(std::move(ring));
    e.add_term(std::move(w), c);
    return e;
  }
  static LaurentElement word(R ring, FreeWord w) {
    auto one = ring.one();
    return monomial(std::move(ring), std::move(w), one);
  }

  const R& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Element coefficient(const FreeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? ring_.zero() : it->second;
  }
  Element coefficient_sum() const {
    Element s = ring_.zero();
    for (const auto& [w, c] : terms_) s = s + c;
    return s;
  }
  bool has_nonconstant_word() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.first.is_identity(); });
  }
  int max_generator() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.max_generator());
    return m;
  }
  bool has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_negative_exponent(); });
  }

  void add_term(FreeWord w, const Element& c) {
    if (!ring_.contains(c)) throw RingMismatch("coefficient outside " + ring_.name());
    if (is_zero_element(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (inserted) return;
    it->second = it->second + c;
    if (is_zero_element(it->second)) terms_.erase(it);
  }

  friend LaurentElement operator+(const LaurentElement& a, const LaurentElement& b) {
    require_same_ring(a.ring_, b.ring_);
    LaurentElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
  }
  friend LaurentElement operator-(const LaurentElement& a) {
    LaurentElement r(a.ring_);
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
    return r;
  }
  friend LaurentElement operator-(const LaurentElement& a, const LaurentElement& b) { return a + (-b); }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
    require_same_ring(a.ring_, b.ring_);
    LaurentElement r(a.ring_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) r.add_term(u * v, cu * cv);
    return r;
  }
  LaurentElement scaled(const Element& c) const {
    LaurentElement r(ring_);
    for (const auto& [w, x] : terms_) r.add_term(w, c * x);
    return r;
  }

  // Applies x_var -> replacement to every word and recollects.
  LaurentElement substitute(int var, const FreeWord& replacement) const {
    LaurentElement r(ring_);
    for (const auto& [w, c] : terms_) r.add_term(w.substitute(var, replacement), c);
    return r;
  }

  template <Ring To>
  LaurentElement<To> mapped(const To& to) const {
    LaurentElement<To> r(to);
    for (const auto& [w, c] : terms_) r.add_term(w, embed(ring_, to, c));
    return r;
  }

  friend bool operator==(const LaurentElement& a, const LaurentElement& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  // Canonical text: "1 - x1*x2*x1^-1"; the zero element prints as "0".
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

// Laurent polynomial in a single commuting symbol t, exponents may be negative.
template <Ring R>
class OneVarLaurent {
 public:
  using Element = ElementOf<R>;

  explicit OneVarLaurent(R ring) : ring_(std::move(ring)) {}

  void add_term(std::int64_t exponent, const Element& c) {
    if (is_zero_element(c)) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (inserted) return;
    it->second = it->second + c;
    if (is_zero_element(it->second)) terms_.erase(it);
  }

  const R& ring() const { return ring_; }
  const std::map<std::int64_t, Element>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      std::string coeff = to_string(c);
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff.erase(0, 1);
      if (out.empty()) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
      if (mono.empty()) out += coeff;
      else if (coeff == "1") out += mono;
      else out += coeff + "*" + mono;
    }
    return out;
  }

  friend bool operator==(const OneVarLaurent&, const OneVarLaurent&) = default;

 private:
  R ring_;
  std::map<std::int64_t, Element> terms_;
};

}  // namespace lpi
