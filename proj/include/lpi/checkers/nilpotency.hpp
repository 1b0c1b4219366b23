#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "lpi/checkers/linear.hpp"
#include "lpi/checkers/search.hpp"
#include "lpi/checkers/verdict.hpp"
#include "lpi/matrix/algebra.hpp"
#include "lpi/rings/vandermonde.hpp"

namespace lpi {

// ---- minimal polynomial ----

// Monic least-degree mu with mu(m) = 0, from the first linear dependency
// among I, m, m^2, ...
template <Field R>
UniPoly<R> minimal_polynomial(const Matrix<R>& m) {
  const R& ring = m.ring();
  const std::size_t n = m.n();
  std::vector<Matrix<R>> powers{Matrix<R>::identity(ring, n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    // Columns vec(m^0) .. vec(m^k); the first k are independent.
    std::vector<std::vector<ElementOf<R>>> a(n * n, std::vector<ElementOf<R>>(k + 1, ring.zero()));
    for (std::size_t c = 0; c <= k; ++c)
      for (std::size_t e = 0; e < n * n; ++e) a[e][c] = powers[c].entries()[e];
    auto kernel = null_space(ring, std::move(a), k + 1);
    if (kernel.empty()) continue;
    return make_monic(UniPoly<R>(ring, kernel.front()));
  }
  throw InternalError("no polynomial relation of degree <= n; Cayley-Hamilton violated");
}

inline UniPoly<RationalField> minimal_polynomial(const Matrix<IntegerRing>& m) {
  return minimal_polynomial(m.mapped(RationalField{}));
}

// Smallest j in [1, limit] with m^j = 0, if any.
template <Ring R>
std::optional<std::uint64_t> nilpotency_index(const Matrix<R>& m, std::uint64_t limit) {
  Matrix<R> p = m;
  for (std::uint64_t j = 1; j <= limit; ++j) {
    if (p.is_zero()) return j;
    if (j < limit) p = p * m;
  }
  return std::nullopt;
}

// ---- nil exponent search ----

template <Ring R>
struct NilQuadruple {
  Matrix<R> a, b, c, u;
};

template <Ring R>
struct NilSearchResult {
  Verdict<NilQuadruple<R>> verdict;
  // Least m with (bacu)^m = 0 on every admissible quadruple seen; only
  // meaningful when the verdict holds.
  std::optional<std::uint64_t> minimal_m;
  std::uint64_t m_max = 0;
};

namespace detail {

// Uniform element of {c in algebra : b c = 0}, via a basis of that
// linear subspace over the free entries of c.
template <Field R>
Matrix<R> sample_right_annihilator(const AlgebraHandle<R>& h, const Matrix<R>& b, Rng& rng,
                                   const SamplingOptions& opt) {
  const auto& ring = h.ring();
  const auto& pos = h.free_positions();
  const std::size_t n = h.n();
  std::vector<std::vector<ElementOf<R>>> eq(n * n, std::vector<ElementOf<R>>(pos.size(), ring.zero()));
  // (b c)_{i,j} = sum_k b_{i,k} c_{k,j}
  for (std::size_t v = 0; v < pos.size(); ++v) {
    auto [k, j] = pos[v];
    for (std::size_t i = 0; i < n; ++i) eq[i * n + j][v] = b.at(i, k);
  }
  auto basis = null_space(ring, std::move(eq), pos.size());
  Matrix<R> c = h.zero();
  for (const auto& vec : basis) {
    auto coeff = sample_scalar(ring, rng, opt);
    for (std::size_t v = 0; v < pos.size(); ++v) c.at(pos[v].first, pos[v].second) = c.at(pos[v].first, pos[v].second) + coeff * vec[v];
  }
  return c;
}

}  // namespace detail

// Over all (a, b, c, u) with a^2 = bc = 0, finds the least m <= m_max with
// (bacu)^m = 0, or a quadruple where (bacu)^m_max != 0.
template <Ring R>
NilSearchResult<R> nil_exponent_search(const AlgebraHandle<R>& h, std::uint64_t m_max, const SearchConfig& cfg) {
  if (m_max < 1) throw PreconditionError("m_max must be at least 1");
  Stopwatch clock;
  NilSearchResult<R> out;
  out.m_max = m_max;
  out.verdict.stats = make_stats(cfg, "a^2 = bc = 0");

  auto check = [&](const NilQuadruple<R>& q) {
    auto idx = nilpotency_index(q.b * q.a * q.c * q.u, m_max);
    return idx ? IndexOutcome{false, false, *idx} : IndexOutcome{true};
  };

  std::optional<NilQuadruple<R>> witness;
  ScanResult scan;
  if (cfg.mode == Mode::exhaustive) {
    if constexpr (FiniteRing<R>) {
      auto elements = enumerate_elements(h, cfg.cap);
      if (!bounded_power(elements.size(), 2, cfg.cap))
        throw CapExceeded("pair space of " + h.name() + " exceeds the cap; use random mode");
      std::vector<const Matrix<R>*> square_zero;
      for (const auto& m : elements)
        if ((m * m).is_zero()) square_zero.push_back(&m);
      std::vector<std::pair<const Matrix<R>*, const Matrix<R>*>> pairs;
      for (const auto& b : elements)
        for (const auto& c : elements)
          if ((b * c).is_zero()) pairs.emplace_back(&b, &c);
      const std::uint64_t na = square_zero.size(), np = pairs.size(), nu = elements.size();
      if (na != 0 && (np > cfg.cap / na || na * np > cfg.cap / nu))
        throw CapExceeded("quadruple space of " + h.name() + " exceeds the cap; use random mode");
      auto at = [&](std::uint64_t i) {
        const auto& [b, c] = pairs[(i / nu) % np];
        return NilQuadruple<R>{*square_zero[i / (nu * np)], *b, *c, elements[i % nu]};
      };
      scan = parallel_scan(na * np * nu, cfg.workers, [&](std::uint64_t i) { return check(at(i)); });
      if (scan.first_violation) witness = at(*scan.first_violation);
    } else {
      throw PreconditionError("exhaustive mode needs a finite coefficient ring");
    }
  } else {
    if constexpr (Field<R>) {
      auto at = [&](std::uint64_t i) {
        Rng rng = substream(cfg.seed, i);
        auto a = sample_square_zero(h, rng, cfg.sampling);
        auto b = sample_element(h, rng, cfg.sampling);
        auto c = detail::sample_right_annihilator(h, b, rng, cfg.sampling);
        auto u = sample_element(h, rng, cfg.sampling);
        return NilQuadruple<R>{std::move(a), std::move(b), std::move(c), std::move(u)};
      };
      scan = parallel_scan(cfg.budget, cfg.workers, [&](std::uint64_t i) { return check(at(i)); });
      if (scan.first_violation) witness = at(*scan.first_violation);
    } else {
      throw PreconditionError("random nil search needs a field");
    }
  }

  out.verdict.stats.evaluations = scan.evaluations;
  if (witness) {
    // Independent recheck: plain repeated multiplication.
    Matrix<R> v = witness->b * witness->a * witness->c * witness->u;
    if (!(witness->a * witness->a).is_zero() || !(witness->b * witness->c).is_zero() || mat_power(v, m_max).is_zero())
      throw InternalError("nil search witness failed to re-verify");
    out.verdict.outcome = Outcome::counterexample;
    out.verdict.witness = std::move(witness);
  } else {
    out.minimal_m = std::max<std::uint64_t>(scan.max_value, 1);
  }
  out.verdict.stats.elapsed_ms = clock.elapsed_ms();
  return out;
}

// ---- square-zero pairs ----

enum class PairClass { not_square_zero, skipped_not_nilpotent, satisfied, violated };

// For a^2 = b^2 = 0: if ab is nilpotent, does (ab)^(2d) = 0?
template <Ring R>
PairClass classify_square_zero_pair(const Matrix<R>& a, const Matrix<R>& b, std::uint64_t d) {
  if (!(a * a).is_zero() || !(b * b).is_zero()) return PairClass::not_square_zero;
  Matrix<R> ab = a * b;
  // An n x n nilpotent matrix over a domain satisfies x^n = 0.
  if (!mat_power(ab, ab.n()).is_zero()) return PairClass::skipped_not_nilpotent;
  return mat_power(ab, 2 * d).is_zero() ? PairClass::satisfied : PairClass::violated;
}

template <Ring R>
struct SquareZeroPair {
  Matrix<R> a, b;
};

template <Ring R>
Verdict<SquareZeroPair<R>> square_zero_nilpotency(const AlgebraHandle<R>& h, std::uint64_t d, const SearchConfig& cfg) {
  if (d < 1) throw PreconditionError("d must be at least 1");
  Stopwatch clock;
  Verdict<SquareZeroPair<R>> v;
  v.stats = make_stats(cfg, "a^2 = b^2 = 0, ab nilpotent");
  auto check = [&](const SquareZeroPair<R>& p) {
    PairClass k = classify_square_zero_pair(p.a, p.b, d);
    return IndexOutcome{k == PairClass::violated, k == PairClass::skipped_not_nilpotent};
  };
  std::optional<SquareZeroPair<R>> witness;
  ScanResult scan;
  if (cfg.mode == Mode::exhaustive) {
    if constexpr (FiniteRing<R>) {
      auto sz = enumerate_square_zero(h, cfg.cap);
      if (!bounded_power(sz.size(), 2, cfg.cap)) throw CapExceeded("square-zero pairs exceed the cap");
      auto at = [&](std::uint64_t i) { return SquareZeroPair<R>{sz[i / sz.size()], sz[i % sz.size()]}; };
      scan = parallel_scan(sz.size() * sz.size(), cfg.workers, [&](std::uint64_t i) { return check(at(i)); });
      if (scan.first_violation) witness = at(*scan.first_violation);
    } else {
      throw PreconditionError("exhaustive mode needs a finite coefficient ring");
    }
  } else {
    auto at = [&](std::uint64_t i) {
      Rng rng = substream(cfg.seed, i);
      auto a = sample_square_zero(h, rng, cfg.sampling);
      auto b = sample_square_zero(h, rng, cfg.sampling);
      return SquareZeroPair<R>{std::move(a), std::move(b)};
    };
    scan = parallel_scan(cfg.budget, cfg.workers, [&](std::uint64_t i) { return check(at(i)); });
    if (scan.first_violation) witness = at(*scan.first_violation);
  }
  v.stats.evaluations = scan.evaluations;
  v.stats.skipped = scan.skipped;
  if (witness) {
    if (mat_power(witness->a * witness->b, 2 * d).is_zero()) throw InternalError("square-zero witness failed to re-verify");
    v.outcome = Outcome::counterexample;
    v.witness = std::move(witness);
  }
  v.stats.elapsed_ms = clock.elapsed_ms();
  return v;
}

// ---- Vandermonde extraction of homogeneous components ----

template <Ring R>
struct VandermondeNilResult {
  // p_0 .. p_d with f(v (lambda u)) = sum_i lambda^i p_i.
  std::vector<Matrix<R>> components;
  std::vector<Matrix<R>> values;  // f(v (lambda_j u)), the solver's input
  bool positive_components_vanish = false;
  // (v u)^d = 0, reported only when every p_i with i >= 1 vanishes.
  std::optional<bool> nilpotent_at_d;
};

namespace detail {

template <Ring R>
Matrix<R> divide_by_scalar(const Matrix<R>& m, const ElementOf<R>& s) {
  if constexpr (Field<R>) {
    return m.scaled(m.ring().inverse(s));
  } else {
    std::vector<ElementOf<R>> e;
    for (const auto& x : m.entries()) e.push_back(divide_exact(x, s));
    return Matrix<R>(m.ring(), m.n(), std::move(e));
  }
}

}  // namespace detail

// Evaluates w(lambda) = f(v (lambda u)) at the given scalars and solves for
// the components. With d + 1 scalars every component is solved for; with
// d nonzero scalars p_0 = f(0) I is taken as known and the rest solved.
template <Ring R>
VandermondeNilResult<R> vandermonde_nil(const UniPoly<R>& f, const Matrix<R>& v, const Matrix<R>& u,
                                        std::span<const ElementOf<R>> lambdas) {
  const R& ring = v.ring();
  require_same_ring(ring, f.ring());
  VandermondeNilResult<R> out;
  const std::size_t n = v.n();
  for (std::size_t a = 0; a < lambdas.size(); ++a)
    for (std::size_t b = a + 1; b < lambdas.size(); ++b)
      if (lambdas[a] == lambdas[b]) throw PreconditionError("repeated lambda " + to_string(lambdas[a]));
  if (f.is_zero()) {
    out.components.assign(std::max<std::size_t>(lambdas.size(), 1), Matrix<R>::zero(ring, n));
    out.positive_components_vanish = true;
    out.nilpotent_at_d = true;
    return out;
  }
  const std::size_t d = f.degree().value();
  if constexpr (FiniteRing<R>) {
    if (ring.order() <= d) throw PreconditionError("field " + ring.name() + " is too small for degree " + std::to_string(d));
  }
  for (const auto& lambda : lambdas) out.values.push_back(unipoly_eval(f, v * u.scaled(lambda)));

  if (lambdas.size() == d + 1) {
    out.components = vandermonde_solve(ring, lambdas, std::span<const Matrix<R>>(out.values));
  } else if (lambdas.size() == d && d >= 1) {
    // sum_{i>=1} lambda^i p_i = lambda * sum_{i>=0} lambda^i p_{i+1}
    Matrix<R> p0 = Matrix<R>::scalar(ring, n, f.coefficient(0));
    std::vector<Matrix<R>> reduced;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero_element(lambdas[j])) throw PreconditionError("with d points every lambda must be nonzero");
      reduced.push_back(detail::divide_by_scalar(out.values[j] - p0, lambdas[j]));
    }
    auto rest = vandermonde_solve(ring, lambdas, std::span<const Matrix<R>>(reduced));
    out.components.push_back(std::move(p0));
    for (auto& m : rest) out.components.push_back(std::move(m));
  } else {
    throw PreconditionError("need d or d + 1 distinct lambdas for degree " + std::to_string(d));
  }

  out.positive_components_vanish = true;
  for (std::size_t i = 1; i < out.components.size(); ++i)
    if (!out.components[i].is_zero()) out.positive_components_vanish = false;
  if (out.positive_components_vanish) out.nilpotent_at_d = mat_power(v * u, d).is_zero();
  return out;
}

}  // namespace lpi
