#pragma once

#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "lpi/matrix/matrix.hpp"

namespace lpi {

// values[j] = sum_i points[j]^i * components[i]
template <Ring R>
std::vector<Matrix<R>> vandermonde_forward(const R& ring, std::span<const ElementOf<R>> points,
                                           std::span<const Matrix<std::type_identity_t<R>>> components) {
  if (components.empty()) throw PreconditionError("no components to evaluate");
  std::vector<Matrix<R>> values;
  values.reserve(points.size());
  for (const auto& x : points) {
    // Horner in the scalar x.
    Matrix<R> acc = Matrix<R>::zero(ring, components[0].n());
    for (std::size_t i = components.size(); i-- > 0;) acc = acc.scaled(x) + components[i];
    values.push_back(std::move(acc));
  }
  return values;
}

// Recovers components p_0..p_d from d+1 evaluations at distinct points.
// Over a prime field the system is solved in-field. Over ZZ it is solved in
// QQ and every component must come back integral.
template <Ring R>
std::vector<Matrix<R>> vandermonde_solve(const R& ring, std::span<const ElementOf<R>> points,
                                         std::span<const Matrix<std::type_identity_t<R>>> values) {
  const std::size_t m = points.size();
  if (m == 0 || values.size() != m) throw PreconditionError("need as many values as points (at least one)");
  for (const auto& v : values) require_same_ring(ring, v.ring());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (points[a] == points[b]) throw PreconditionError("repeated Vandermonde point " + to_string(points[a]));
  if constexpr (FiniteRing<R>) {
    if (ring.order() < m) throw PreconditionError("field " + ring.name() + " has fewer than " + std::to_string(m) + " elements");
  }
  const std::size_t n = values[0].n();

  std::vector<Matrix<R>> components;
  components.reserve(m);
  if constexpr (Field<R>) {
    std::vector<ElementOf<R>> vm;
    vm.reserve(m * m);
    for (const auto& x : points)
      for (std::size_t i = 0; i < m; ++i) vm.push_back(power(ring, x, i));
    auto inv = detail::gauss_jordan_inverse(Matrix<R>(ring, m, std::move(vm)));
    if (!inv) throw InternalError("Vandermonde matrix with distinct points is singular");
    for (std::size_t i = 0; i < m; ++i) {
      Matrix<R> p = Matrix<R>::zero(ring, n);
      for (std::size_t j = 0; j < m; ++j) p += values[j].scaled(inv->at(i, j));
      components.push_back(std::move(p));
    }
  } else {
    static_assert(std::same_as<R, IntegerRing>, "Vandermonde solve needs a field or ZZ");
    RationalField qq;
    std::vector<Rational> vm;
    vm.reserve(m * m);
    for (const auto& x : points)
      for (std::size_t i = 0; i < m; ++i) vm.push_back(Rational(pow(x, i)));
    auto inv = detail::gauss_jordan_inverse(Matrix<RationalField>(qq, m, std::move(vm)));
    if (!inv) throw InternalError("Vandermonde matrix with distinct points is singular");
    Integer common(1);
    for (const auto& q : inv->entries()) common = lcm(common, q.denominator());
    for (std::size_t i = 0; i < m; ++i) {
      Matrix<R> scaled_sum = Matrix<R>::zero(ring, n);
      for (std::size_t j = 0; j < m; ++j) {
        const Rational& q = inv->at(i, j);
        scaled_sum += values[j].scaled(q.numerator() * divide_exact(common, q.denominator()));
      }
      std::vector<Integer> e;
      e.reserve(n * n);
      for (const auto& x : scaled_sum.entries()) {
        if (!mpz_divisible_p(x.mpz().get_mpz_t(), common.mpz().get_mpz_t()))
          throw PreconditionError("Vandermonde component " + std::to_string(i) + " is not integral");
        e.push_back(divide_exact(x, common));
      }
      components.emplace_back(ring, n, std::move(e));
    }
  }

  auto check = vandermonde_forward(ring, points, std::span<const Matrix<R>>(components));
  for (std::size_t j = 0; j < m; ++j)
    if (!(check[j] == values[j])) throw InternalError("Vandermonde solution does not reproduce its input");
  return components;
}

}  // namespace lpi
