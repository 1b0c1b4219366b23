#pragma once

#include <string>
#include <vector>

#include "lpi/matrix/algebra.hpp"

namespace lpi::text {

// "M2@Fp:2", "T3@Fp:2", "D2@ZZ", "M2@ZZ"
struct AlgebraSpec {
  Family family = Family::full;
  std::size_t n = 1;
  AnyRing ring;
};

AlgebraSpec parse_algebra(const std::string& text);
std::string algebra_name(const AlgebraSpec& spec);

// "[[0,1],[0,0]]", square, integer entries (reduced into the ring later).
std::vector<std::vector<Integer>> parse_matrix_literal(const std::string& text);

template <Ring R>
Matrix<R> matrix_literal(const std::string& text, const AlgebraHandle<R>& h) {
  auto m = Matrix<R>::from_rows(h.ring(), parse_matrix_literal(text));
  if (m.n() != h.n()) throw PreconditionError("matrix " + text + " is not " + std::to_string(h.n()) + "x" + std::to_string(h.n()));
  if (!h.contains(m)) throw PreconditionError("matrix " + text + " is not in " + h.name());
  return m;
}

}  // namespace lpi::text
