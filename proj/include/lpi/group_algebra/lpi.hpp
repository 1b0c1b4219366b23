#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "lpi/group_algebra/laurent.hpp"
#include "lpi/rings/unipoly.hpp"

namespace lpi {

// True iff every nonconstant support word has a nonzero exponent sum in at
// least one generator.
template <Ring R>
bool is_admissible(const LaurentElement<R>& e) {
  const int vars = e.max_generator();
  for (const auto& [w, c] : e.terms()) {
    if (w.is_identity()) continue;
    bool ok = false;
    for (int v = 1; v <= vars && !ok; ++v) ok = w.exp_sum(v) != 0;
    if (!ok) return false;
  }
  return true;
}

template <Ring R>
bool all_totals_nonzero(const LaurentElement<R>& e) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [](const auto& t) { return t.first.is_identity() || t.first.exp_sum_total() != 0; });
}

template <Ring R>
struct Normalized {
  LaurentElement<R> element;
  int variable = 0;  // 0 when no substitution was needed
  std::int64_t k = 1;
};

// Substitutes one variable x_i -> x_i^k so that every nonconstant support
// word gets a nonzero total exponent sum. Smallest i first, then smallest k.
template <Ring R>
Normalized<R> normalize(const LaurentElement<R>& e) {
  if (e.is_zero()) throw PreconditionError("cannot normalize the zero element");
  if (!is_admissible(e)) throw PreconditionError("LPI is not admissible: some nonconstant word has every exponent sum zero");
  if (all_totals_nonzero(e)) return {e, 0, 1};

  struct Sums {
    std::int64_t total;
    std::int64_t in_var;
  };
  for (int var = 1; var <= e.max_generator(); ++var) {
    std::vector<Sums> sums;
    bool hopeless = false;
    for (const auto& [w, c] : e.terms()) {
      if (w.is_identity()) continue;
      Sums s{w.exp_sum_total(), w.exp_sum(var)};
      if (s.total == 0 && s.in_var == 0) hopeless = true;
      sums.push_back(s);
    }
    if (hopeless) continue;
    // Each word rules out at most one k, so a valid one exists below this bound.
    const std::int64_t k_limit = static_cast<std::int64_t>(sums.size()) + 2;
    for (std::int64_t k = 2; k <= k_limit; ++k) {
      bool good = std::all_of(sums.begin(), sums.end(), [&](const Sums& s) {
        return checked_add(s.total, checked_mul(k - 1, s.in_var)) != 0;
      });
      if (good) {
        auto out = e.substitute(var, FreeWord::generator(var, k));
        return {std::move(out), var, k};
      }
    }
  }
  throw PreconditionError("no single substitution x_i -> x_i^k makes every total exponent sum nonzero");
}

struct LpiProfile {
  std::int64_t l = 0;
  std::int64_t r = 0;
  std::int64_t d = 3;

  friend bool operator==(const LpiProfile&, const LpiProfile&) = default;
};

namespace detail {

template <Ring R>
void require_profilable(const LaurentElement<R>& e) {
  if (e.is_zero() || !e.has_nonconstant_word())
    throw PreconditionError("profile needs at least one nonconstant word");
  if (!all_totals_nonzero(e))
    throw PreconditionError("some nonconstant word has total exponent sum zero; normalize first");
}

}  // namespace detail

// l and r include the constant term's exponent 0; d = 4(r - l) + 3.
template <Ring R>
LpiProfile profile(const LaurentElement<R>& e) {
  detail::require_profilable(e);
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (const auto& [w, c] : e.terms()) {
    std::int64_t t = w.exp_sum_total();
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  std::int64_t width = checked_add(hi, checked_mul(lo, -1));
  return {lo, hi, checked_add(checked_mul(4, width), 3)};
}

template <Ring R>
struct DiagonalSpecialization {
  OneVarLaurent<R> diagonal;  // P(t, ..., t)
  std::optional<UniPoly<R>> f0;  // t^(-l) P(t, ..., t); absent when the diagonal collapsed to 0

  bool collapsed() const { return !f0.has_value(); }
};

template <Ring R>
DiagonalSpecialization<R> diagonal_specialize(const LaurentElement<R>& e) {
  LpiProfile p = profile(e);
  OneVarLaurent<R> diag(e.ring());
  for (const auto& [w, c] : e.terms()) diag.add_term(w.exp_sum_total(), c);
  if (diag.is_zero()) return {std::move(diag), std::nullopt};
  std::vector<ElementOf<R>> coeffs(static_cast<std::size_t>(p.r - p.l + 1), e.ring().zero());
  for (const auto& [exponent, c] : diag.terms()) coeffs[static_cast<std::size_t>(exponent - p.l)] = c;
  return {std::move(diag), UniPoly<R>(e.ring(), std::move(coeffs))};
}

inline constexpr int kMaxStandardDegree = 8;

// S_n = sum over permutations of sign(sigma) x_sigma(1) ... x_sigma(n).
template <Ring R>
LaurentElement<R> standard_polynomial(const R& ring, int n) {
  if (n < 1 || n > kMaxStandardDegree)
    throw PreconditionError("standard polynomial degree must be in 1.." + std::to_string(kMaxStandardDegree));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  LaurentElement<R> s(ring);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    std::vector<Syllable> letters;
    for (int g : perm) letters.push_back({g, 1});
    s.add_term(FreeWord(std::move(letters)), inversions % 2 ? -ring.one() : ring.one());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

// Group identity w = 1 as the Laurent polynomial 1 - w.
template <Ring R>
LaurentElement<R> gi_to_lpi(const R& ring, const FreeWord& w) {
  if (w.is_identity()) throw PreconditionError("the empty word gives 1 - 1 = 0, which is not a Laurent polynomial");
  return LaurentElement<R>::constant(ring, ring.one()) - LaurentElement<R>::word(ring, w);
}

inline constexpr int kMaxAmitsurLevitzki = 4;

// f1 = S_2n * (x1 ... x_2n)^-1
template <Ring R>
LaurentElement<R> amitsur_levitzki_lpi(const R& ring, int n) {
  if (n < 1 || n > kMaxAmitsurLevitzki)
    throw PreconditionError("AL(n) needs 1 <= n <= " + std::to_string(kMaxAmitsurLevitzki));
  std::vector<Syllable> letters;
  for (int g = 1; g <= 2 * n; ++g) letters.push_back({g, 1});
  FreeWord tail = FreeWord(std::move(letters)).inverse();
  return standard_polynomial(ring, 2 * n) * LaurentElement<R>::word(ring, tail);
}

// f2 = f1 + S_2n
template <Ring R>
LaurentElement<R> amitsur_levitzki_companion(const R& ring, int n) {
  return amitsur_levitzki_lpi(ring, n) + standard_polynomial(ring, 2 * n);
}

}  // namespace lpi
