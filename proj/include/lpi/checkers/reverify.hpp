#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpi/group_algebra/laurent.hpp"
#include "lpi/matrix/matrix.hpp"
#include "lpi/quotient/quotient.hpp"

// Independent re-evaluation of counterexample witnesses. Nothing here calls
// the matrix or quotient arithmetic used by the search loops; only the
// coefficient ring operations are shared.
namespace lpi::reverify {

template <Ring R>
using Grid = std::vector<std::vector<ElementOf<R>>>;

template <Ring R>
Grid<R> grid_of(const Matrix<R>& m) {
  Grid<R> g(m.n(), std::vector<ElementOf<R>>(m.n(), m.ring().zero()));
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) g[i][j] = m.at(i, j);
  return g;
}

template <Ring R>
Grid<R> identity(const R& ring, std::size_t n) {
  Grid<R> g(n, std::vector<ElementOf<R>>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = ring.one();
  return g;
}

template <Ring R>
Grid<R> product(const R& ring, const Grid<R>& a, const Grid<R>& b) {
  const std::size_t n = a.size();
  Grid<R> c(n, std::vector<ElementOf<R>>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto s = ring.zero();
      for (std::size_t k = 0; k < n; ++k) s = s + a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

template <Ring R>
Grid<R> minor_of(const Grid<R>& a, std::size_t row, std::size_t col) {
  Grid<R> m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == row) continue;
    std::vector<ElementOf<R>> r;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != col) r.push_back(a[i][j]);
    m.push_back(std::move(r));
  }
  return m;
}

// Laplace expansion along the first row.
template <Ring R>
ElementOf<R> cofactor_determinant(const R& ring, const Grid<R>& a) {
  if (a.empty()) return ring.one();
  if (a.size() == 1) return a[0][0];
  auto det = ring.zero();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (is_zero_element(a[0][j])) continue;
    auto term = a[0][j] * cofactor_determinant(ring, minor_of<R>(a, 0, j));
    det = j % 2 ? det - term : det + term;
  }
  return det;
}

// Adjugate divided by the determinant; the determinant must be a unit.
template <Ring R>
std::optional<Grid<R>> adjugate_inverse(const R& ring, const Grid<R>& a) {
  auto det = cofactor_determinant(ring, a);
  std::optional<ElementOf<R>> det_inv;
  if constexpr (Field<R>) {
    if (!is_zero_element(det)) det_inv = ring.inverse(det);
  } else {
    if (det == ring.one() || det == -ring.one()) det_inv = det;
  }
  if (!det_inv) return std::nullopt;
  const std::size_t n = a.size();
  Grid<R> inv(n, std::vector<ElementOf<R>>(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = n == 1 ? ring.one() : cofactor_determinant(ring, minor_of<R>(a, j, i));
      inv[i][j] = ((i + j) % 2 ? -c : c) * *det_inv;
    }
  return inv;
}

template <Ring R>
bool grid_is_zero(const Grid<R>& g) {
  for (const auto& row : g)
    for (const auto& x : row)
      if (!is_zero_element(x)) return false;
  return true;
}

template <Ring R>
Matrix<R> to_matrix(const R& ring, const Grid<R>& g) {
  std::vector<ElementOf<R>> e;
  for (const auto& row : g) e.insert(e.end(), row.begin(), row.end());
  return Matrix<R>(ring, g.size(), std::move(e));
}

// Word value, letter by letter.
template <Ring R>
Grid<R> word_value(const R& ring, const FreeWord& w, const std::vector<Grid<R>>& values, std::size_t n) {
  Grid<R> acc = identity(ring, n);
  for (const auto& s : w.syllables()) {
    const std::size_t slot = static_cast<std::size_t>(s.generator - 1);
    if (slot >= values.size()) throw PreconditionError("witness does not assign x" + std::to_string(s.generator));
    Grid<R> letter = values[slot];
    if (s.exponent < 0) {
      auto inv = adjugate_inverse(ring, letter);
      if (!inv) throw NotInvertible("witness assigns a non-unit to an inverted variable");
      letter = *inv;
    }
    const std::int64_t reps = s.exponent < 0 ? -s.exponent : s.exponent;
    for (std::int64_t k = 0; k < reps; ++k) acc = product(ring, acc, letter);
  }
  return acc;
}

template <Ring R>
Matrix<R> lpi_value(const LaurentElement<R>& e, const std::vector<Matrix<R>>& tuple, std::size_t n) {
  const R& ring = e.ring();
  std::vector<Grid<R>> values;
  for (const auto& m : tuple) values.push_back(grid_of(m));
  Grid<R> sum(n, std::vector<ElementOf<R>>(n, ring.zero()));
  for (const auto& [w, c] : e.terms()) {
    Grid<R> v = word_value(ring, w, values, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum[i][j] = sum[i][j] + c * v[i][j];
  }
  return to_matrix(ring, sum);
}

// True iff the witness really makes e nonzero.
template <Ring R>
bool lpi_witness_holds(const LaurentElement<R>& e, const std::vector<Matrix<R>>& tuple, std::size_t n) {
  return !lpi_value(e, tuple, n).is_zero();
}

// True iff the witness really makes w different from 1.
template <Ring R>
bool group_witness_holds(const FreeWord& w, const std::vector<Matrix<R>>& tuple, const R& ring, std::size_t n) {
  std::vector<Grid<R>> values;
  for (const auto& m : tuple) values.push_back(grid_of(m));
  return word_value(ring, w, values, n) != identity(ring, n);
}

// Quotient elements as letter strings; a product vanishes when it contains
// "xx" or "yy". This is the free-algebra-then-rewrite view of F.
template <Ring R>
using StringPoly = std::map<std::string, ElementOf<R>>;

template <Ring R>
void string_add(StringPoly<R>& p, const std::string& w, const ElementOf<R>& c) {
  if (w.find("xx") != std::string::npos || w.find("yy") != std::string::npos) return;
  auto [it, inserted] = p.try_emplace(w, c);
  if (!inserted) it->second = it->second + c;
  if (is_zero_element(it->second)) p.erase(it);
}

template <Ring R>
StringPoly<R> string_product(const StringPoly<R>& a, const StringPoly<R>& b) {
  StringPoly<R> out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) string_add<R>(out, u + v, cu * cv);
  return out;
}

template <Ring R>
StringPoly<R> string_form(const QuotientElement<R>& q) {
  StringPoly<R> p;
  for (const auto& [w, c] : q.terms()) string_add<R>(p, w.letters(), c);
  return p;
}

// Value of a positive-word Laurent element on quotient elements.
template <Ring R>
StringPoly<R> quotient_value(const LaurentElement<R>& e, const std::vector<QuotientElement<R>>& tuple) {
  StringPoly<R> sum;
  for (const auto& [w, c] : e.terms()) {
    StringPoly<R> acc;
    string_add<R>(acc, "", c);
    for (const auto& s : w.syllables()) {
      if (s.exponent < 0) throw PreconditionError("quotient re-verification needs positive exponents");
      auto v = string_form(tuple.at(static_cast<std::size_t>(s.generator - 1)));
      for (std::int64_t k = 0; k < s.exponent; ++k) acc = string_product<R>(acc, v);
    }
    for (const auto& [word, coeff] : acc) string_add<R>(sum, word, coeff);
  }
  return sum;
}

}  // namespace lpi::reverify
