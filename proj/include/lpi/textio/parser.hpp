#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lpi/group_algebra/lpi.hpp"
#include "lpi/quotient/quotient.hpp"
#include "lpi/textio/ast.hpp"

namespace lpi::text {

//   expr    = [ "+" | "-" ] term { ( "+" | "-" ) term }
//   term    = factor { "*" factor }
//   factor  = primary [ "^" [ "-" ] INT ]
//   primary = INT | VAR | "(" expr ")" | "S(" INT ")" | "AL(" INT ")"
//   VAR     = "x1" | ... | "x8" | "x" | "y"
// Throws ParseError carrying line and column.
Expr parse(const std::string& text);

// Exponent of a power of a sum is limited; words may carry any exponent.
inline constexpr std::int64_t kMaxExpansionPower = 64;

namespace detail {

template <Ring R>
std::optional<ElementOf<R>> scalar_inverse(const R& ring, const ElementOf<R>& c) {
  if constexpr (Field<R>) {
    if (is_zero_element(c)) return std::nullopt;
    return ring.inverse(c);
  } else {
    if (c == ring.one() || c == -ring.one()) return c;
    return std::nullopt;
  }
}

}  // namespace detail

template <Ring R>
LaurentElement<R> to_laurent(const Expr& e, const R& ring) {
  using K = Expr::Kind;
  using L = LaurentElement<R>;
  switch (e.kind) {
    case K::integer: return L::constant(ring, ring.from_integer(e.value));
    case K::variable: {
      if (e.name.size() < 2) throw PreconditionError("'" + e.name + "' is a quotient letter; use x1..x8 here");
      return L::word(ring, FreeWord::generator(std::stoi(e.name.substr(1))));
    }
    case K::macro: {
      int n = static_cast<int>(e.value.to_int64().value_or(0));
      return e.name == "S" ? standard_polynomial(ring, n) : amitsur_levitzki_lpi(ring, n);
    }
    case K::product: {
      L acc = L::constant(ring, ring.one());
      for (const auto& f : e.children) acc = acc * to_laurent(f, ring);
      return acc;
    }
    case K::sum: {
      L acc(ring);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        L t = to_laurent(e.children[i], ring);
        acc = e.negated[i] ? acc - t : acc + t;
      }
      return acc;
    }
    case K::power: {
      L base = to_laurent(e.children.front(), ring);
      const std::int64_t k = e.exponent;
      if (k == 0) return L::constant(ring, ring.one());
      if (base.size() == 1) {
        const auto& [w, c] = *base.terms().begin();
        const std::uint64_t mag = k > 0 ? static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(-k);
        auto coeff = c;
        if (k < 0) {
          auto inv = detail::scalar_inverse(ring, c);
          if (!inv) throw PreconditionError("coefficient " + to_string(c) + " is not invertible in " + ring.name());
          coeff = *inv;
        }
        return L::monomial(ring, w.power(k), power(ring, coeff, mag));
      }
      if (base.is_zero()) {
        if (k < 0) throw PreconditionError("0 has no inverse");
        return base;
      }
      if (k < 0) throw PreconditionError("negative exponent on '" + print(e.children.front()) + "', which is not a single term");
      if (k > kMaxExpansionPower)
        throw PreconditionError("exponent " + std::to_string(k) + " on a sum exceeds " + std::to_string(kMaxExpansionPower));
      L acc = L::constant(ring, ring.one());
      for (std::int64_t i = 0; i < k; ++i) acc = acc * base;
      return acc;
    }
  }
  throw InternalError("unhandled expression node");
}

template <Ring R>
QuotientElement<R> to_quotient(const Expr& e, const R& ring) {
  using K = Expr::Kind;
  using Q = QuotientElement<R>;
  switch (e.kind) {
    case K::integer: return Q::constant(ring, ring.from_integer(e.value));
    case K::variable:
      if (e.name == "x") return Q::letter(ring, Letter::x);
      if (e.name == "y") return Q::letter(ring, Letter::y);
      throw PreconditionError("'" + e.name + "' is not a quotient letter; use x and y");
    case K::macro: throw PreconditionError(e.name + "(n) is not defined on the quotient algebra");
    case K::product: {
      Q acc = Q::one(ring);
      for (const auto& f : e.children) acc = acc * to_quotient(f, ring);
      return acc;
    }
    case K::sum: {
      Q acc(ring);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        Q t = to_quotient(e.children[i], ring);
        acc = e.negated[i] ? acc - t : acc + t;
      }
      return acc;
    }
    case K::power: {
      Q base = to_quotient(e.children.front(), ring);
      const std::int64_t k = e.exponent;
      if (k >= 0) return q_power(base, static_cast<std::uint64_t>(k));
      std::vector<ElementaryFactor<R>> f{as_elementary_factor(base)};
      auto unit = q_unit(ring, std::span<const ElementaryFactor<R>>(f));
      return q_power(unit.inverse(), static_cast<std::uint64_t>(-k));
    }
  }
  throw InternalError("unhandled expression node");
}

// A single word with coefficient 1, e.g. "x1^2*x2^-1" or "1".
FreeWord parse_word(const std::string& text);

// A polynomial in x1 with nonnegative exponents, e.g. "x1^2 - x1".
UniPoly<IntegerRing> parse_integer_polynomial(const std::string& text);

}  // namespace lpi::text
