#pragma once

#include <string>
#include <vector>

#include "lpi/group_algebra/lpi.hpp"
#include "lpi/rings/prime_field.hpp"

namespace lpi {

// Substitutes args[i-1] for x_i in e and expands in the group algebra.
template <Ring R>
LaurentElement<R> expand_at(const LaurentElement<R>& e, const std::vector<LaurentElement<std::type_identity_t<R>>>& args) {
  LaurentElement<R> out(e.ring());
  for (const auto& [w, c] : e.terms()) {
    auto term = LaurentElement<R>::constant(e.ring(), c);
    for (const auto& s : w.syllables()) {
      if (s.generator < 1 || static_cast<std::size_t>(s.generator) > args.size())
        throw PreconditionError("variable x" + std::to_string(s.generator) + " has no substitute");
      if (s.exponent < 0) throw PreconditionError("expansion needs positive exponents");
      for (std::int64_t k = 0; k < s.exponent; ++k) term = term * args[s.generator - 1];
    }
    out = out + term;
  }
  return out;
}

template <Ring R>
struct TermRow {
  FreeWord word;
  ElementOf<R> computed;
  ElementOf<R> stated;
  bool match = false;
};

template <Ring R>
struct ExpansionComparison {
  LaurentElement<R> computed;
  LaurentElement<R> stated;
  std::vector<TermRow<R>> rows;  // union of both supports, canonical order
  bool equal = false;
};

template <Ring R>
ExpansionComparison<R> compare_expansions(LaurentElement<R> computed, LaurentElement<R> stated) {
  ExpansionComparison<R> out{std::move(computed), std::move(stated), {}, false};
  std::map<FreeWord, bool> words;
  for (const auto& [w, c] : out.computed.terms()) words[w];
  for (const auto& [w, c] : out.stated.terms()) words[w];
  out.equal = true;
  for (const auto& [w, unused] : words) {
    TermRow<R> row{w, out.computed.coefficient(w), out.stated.coefficient(w)};
    row.match = row.computed == row.stated;
    out.equal = out.equal && row.match;
    out.rows.push_back(std::move(row));
  }
  return out;
}

struct S3Expansion {
  ExpansionComparison<IntegerRing> integers;
  ExpansionComparison<PrimeField> mod2;
  LaurentElement<IntegerRing> s2;  // S_2(X, Y)
};

// The closed form (YX)^2 - X^2Y^2 - YX^2Y + XY^2X in x1 = X, x2 = Y.
LaurentElement<IntegerRing> stated_s3_form();

// S_3(X, Y, XY) expanded over ZZ and over F_2, each compared term by term
// with the closed form.
S3Expansion s3_expand();

// Writes a word in x1, x2 with the letters X and Y, e.g. "X^2*Y".
std::string xy_text(const std::string& canonical);

}  // namespace lpi
