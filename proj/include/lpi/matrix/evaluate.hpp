#pragma once

#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "lpi/group_algebra/laurent.hpp"
#include "lpi/matrix/matrix.hpp"

namespace lpi {

// A value assigned to a variable, with its inverse when it is a unit.
template <Ring R>
struct MatrixArg {
  Matrix<R> value;
  std::optional<Matrix<R>> inverse;
};

template <Ring R>
std::vector<MatrixArg<R>> with_inverses(const std::vector<Matrix<R>>& values) {
  std::vector<MatrixArg<R>> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back({v, mat_inverse(v)});
  return out;
}

template <Ring R>
Matrix<R> evaluate_word(const FreeWord& w, std::span<const MatrixArg<std::type_identity_t<R>>> args, const R& ring,
                        std::size_t n) {
  Matrix<R> acc = Matrix<R>::identity(ring, n);
  for (const auto& s : w.syllables()) {
    if (static_cast<std::size_t>(s.generator) > args.size())
      throw PreconditionError("variable x" + std::to_string(s.generator) + " is not assigned");
    const auto& arg = args[static_cast<std::size_t>(s.generator - 1)];
    if (s.exponent > 0) {
      acc = acc * mat_power(arg.value, static_cast<std::uint64_t>(s.exponent));
    } else {
      if (!arg.inverse)
        throw NotInvertible("x" + std::to_string(s.generator) + " has a negative exponent but is assigned a non-unit");
      acc = acc * mat_power(*arg.inverse, static_cast<std::uint64_t>(-s.exponent));
    }
  }
  return acc;
}

template <Ring R>
Matrix<R> evaluate(const LaurentElement<R>& e, std::span<const MatrixArg<std::type_identity_t<R>>> args, std::size_t n) {
  const R& ring = e.ring();
  Matrix<R> sum = Matrix<R>::zero(ring, n);
  for (const auto& [w, c] : e.terms()) sum += evaluate_word(w, args, ring, n).scaled(c);
  return sum;
}

// f(a_1, ..., a_l). Inverses are computed on demand for negative exponents.
template <Ring R>
Matrix<R> evaluate(const LaurentElement<R>& e, std::span<const Matrix<std::type_identity_t<R>>> assignment) {
  if (assignment.empty()) {
    if (e.has_nonconstant_word()) throw PreconditionError("no variables assigned");
    throw PreconditionError("empty assignment: matrix size unknown");
  }
  for (const auto& m : assignment) require_same_ring(e.ring(), m.ring());
  std::vector<MatrixArg<R>> args;
  args.reserve(assignment.size());
  for (const auto& m : assignment) args.push_back({m, e.has_negative_exponent() ? mat_inverse(m) : std::nullopt});
  return evaluate<R>(e, args, assignment[0].n());
}

}  // namespace lpi
