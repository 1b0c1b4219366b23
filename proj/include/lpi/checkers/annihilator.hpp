#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lpi/checkers/verdict.hpp"
#include "lpi/matrix/algebra.hpp"

namespace lpi {

// x^r = x^t with t >= 1 minimal, then r > t minimal.
struct PowerCycle {
  std::uint64_t t = 1;
  std::uint64_t r = 2;
  friend auto operator<=>(const PowerCycle&, const PowerCycle&) = default;
};

template <Ring R>
PowerCycle power_cycle(const Matrix<R>& x) {
  std::map<Matrix<R>, std::uint64_t> seen;
  Matrix<R> p = x;
  for (std::uint64_t k = 1;; ++k) {
    auto [it, fresh] = seen.emplace(p, k);
    if (!fresh) return {it->second, k};
    p = p * x;
  }
}

template <Ring R>
struct Annihilator {
  UniPoly<R> g;
  // Each distinct X^r - X^t with the number of elements producing it.
  std::vector<std::pair<PowerCycle, std::uint64_t>> factors;
  bool with_duplicates = false;
  std::uint64_t elements = 0;
  std::uint64_t pairs_verified = 0;
};

// g = product of p_x = X^r - X^t over the algebra's elements. Distinct
// factors only unless with_duplicates is set. The result is checked to
// annihilate ab for every pair with a^2 = b^2 = 0 before it is returned.
template <FiniteRing R>
Annihilator<R> finite_annihilator(const AlgebraHandle<R>& h, bool with_duplicates = false,
                                  std::uint64_t cap = kDefaultCap) {
  const R& ring = h.ring();
  Annihilator<R> out{UniPoly<R>::constant(ring, ring.one()), {}};
  out.with_duplicates = with_duplicates;
  std::map<PowerCycle, std::uint64_t> counts;
  ElementEnumeration<R> all(h, cap);
  for (std::uint64_t i = 0; i < all.size(); ++i) ++counts[power_cycle(all.at(i))];
  out.elements = all.size();
  for (const auto& [cycle, count] : counts) {
    out.factors.emplace_back(cycle, count);
    auto p = UniPoly<R>::binomial_difference(ring, cycle.r, cycle.t);
    for (std::uint64_t k = 0; k < (with_duplicates ? count : 1); ++k) out.g = out.g * p;
  }
  if (out.g.is_zero()) throw InternalError("annihilator collapsed to the zero polynomial");

  auto square_zero = enumerate_square_zero(h, cap);
  for (const auto& a : square_zero)
    for (const auto& b : square_zero) {
      if (!unipoly_eval(out.g, a * b).is_zero())
        throw InternalError("g(ab) != 0 for a = " + a.str() + ", b = " + b.str());
      ++out.pairs_verified;
    }
  return out;
}

struct InfiniteCounterexample {
  Matrix<IntegerRing> a;
  Matrix<IntegerRing> b;
  Integer t;
  std::uint64_t trials = 0;
  Matrix<IntegerRing> value;  // g(ab)
};

// For nonzero g over ZZ, a = e21 and b = t e12 give g(ab) = diag(g(0), g(t));
// some t in 0..deg g makes this nonzero.
inline InfiniteCounterexample infinite_counterexample(const UniPoly<IntegerRing>& g) {
  if (g.is_zero()) throw PreconditionError("g must be a nonzero polynomial");
  IntegerRing zz;
  auto a = Matrix<IntegerRing>::unit(zz, 2, 2, 1);
  for (std::uint64_t t = 0;; ++t) {
    auto b = Matrix<IntegerRing>::unit(zz, 2, 1, 2).scaled(Integer(t));
    auto value = unipoly_eval(g, a * b);
    if (!value.is_zero()) {
      if (!(a * a).is_zero() || !(b * b).is_zero()) throw InternalError("counterexample pair is not square-zero");
      if (t > g.degree().value()) throw InternalError("more trials than a nonzero polynomial has roots");
      return {std::move(a), std::move(b), Integer(t), t + 1, std::move(value)};
    }
  }
}

// Nonzero polynomial over ZZ of degree <= max_degree with coefficients in
// [-bound, bound]; the leading coefficient is nonzero.
inline UniPoly<IntegerRing> sample_integer_polynomial(Rng& rng, std::size_t max_degree, std::int64_t bound = 9) {
  const std::size_t degree = static_cast<std::size_t>(uniform_below(rng, max_degree + 1));
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i <= degree; ++i) {
    std::int64_t v = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(2 * bound + 1))) - bound;
    if (i == degree && v == 0) v = uniform_below(rng, 2) ? bound : -bound;
    coeffs.emplace_back(v);
  }
  return UniPoly<IntegerRing>(IntegerRing{}, std::move(coeffs));
}

}  // namespace lpi
