#pragma once

#include <cstdint>
#include <vector>

#include "lpi/checkers/reverify.hpp"
#include "lpi/checkers/search.hpp"
#include "lpi/checkers/verdict.hpp"
#include "lpi/group_algebra/lpi.hpp"
#include "lpi/quotient/quotient.hpp"

namespace lpi {

struct QuotientSampling {
  std::size_t max_support = 8;
  std::uint32_t max_length = 5;
  std::int64_t coefficient_bound = 9;  // over ZZ: nonzero in [-bound, bound]
};

template <Ring R>
QuotientElement<R> sample_quotient_element(const R& ring, Rng& rng, const QuotientSampling& opt = {}) {
  QuotientElement<R> e(ring);
  const std::size_t support = 1 + uniform_below(rng, opt.max_support);
  for (std::size_t k = 0; k < support; ++k) {
    auto length = static_cast<std::uint32_t>(uniform_below(rng, opt.max_length + 1));
    Letter first = uniform_below(rng, 2) ? Letter::y : Letter::x;
    ElementOf<R> c = ring.zero();
    if constexpr (FiniteRing<R>) {
      c = ring.element(1 + uniform_below(rng, ring.order() - 1));
    } else {
      auto span = static_cast<std::uint64_t>(2 * opt.coefficient_bound);
      auto v = static_cast<std::int64_t>(uniform_below(rng, span)) - opt.coefficient_bound;
      c = ring.from_integer(Integer(v >= 0 ? v + 1 : v));
    }
    e.add_term(AlternatingWord(first, length), c);
  }
  return e;
}

template <Ring R>
using QuotientTuple = std::vector<QuotientElement<R>>;

template <Ring R>
struct QuotientPiResult {
  Verdict<QuotientTuple<R>> verdict;  // S_2n on sampled tuples
  QuotientElement<R> s2_units;        // S_2(1+x, 1+y)
  QuotientElement<R> s3_units;        // S_3(1+x, 1+y, (1+x)(1+y))
};

template <Ring R>
bool quotient_witness_holds(const LaurentElement<R>& e, const QuotientTuple<R>& tuple) {
  return !reverify::quotient_value(e, tuple).empty();
}

// Samples `samples` tuples of 2n elements of R<x,y>/(x^2, y^2) and checks
// S_2n on them; also evaluates S_2 and S_3 on the units 1+x, 1+y, (1+x)(1+y).
template <Ring R>
QuotientPiResult<R> quotient_pi_check(const R& ring, int n, std::uint64_t samples, std::uint64_t seed,
                                      unsigned workers = 1, const QuotientSampling& opt = {}) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  Stopwatch clock;
  SearchConfig cfg;
  cfg.mode = Mode::random;
  cfg.seed = seed;
  QuotientPiResult<R> out{{}, QuotientElement<R>(ring), QuotientElement<R>(ring)};
  out.verdict.stats = make_stats(cfg, "quotient elements");

  const auto s = standard_polynomial(ring, 2 * n);
  auto at = [&](std::uint64_t i) {
    Rng rng = substream(seed, i);
    QuotientTuple<R> t;
    for (int k = 0; k < 2 * n; ++k) t.push_back(sample_quotient_element(ring, rng, opt));
    return t;
  };
  auto scan = parallel_scan(samples, workers, [&](std::uint64_t i) {
    auto t = at(i);
    std::vector<QuotientArg<R>> args(t.begin(), t.end());
    return IndexOutcome{!q_evaluate(s, std::span<const QuotientArg<R>>(args)).is_zero()};
  });
  out.verdict.stats.evaluations = scan.evaluations;
  if (scan.first_violation) {
    auto t = at(*scan.first_violation);
    if (!quotient_witness_holds(s, t)) throw InternalError("quotient witness failed to re-verify");
    out.verdict.outcome = Outcome::counterexample;
    out.verdict.witness = std::move(t);
  }

  const std::vector<ElementaryFactor<R>> fx{{ring.one(), Letter::x}}, fy{{ring.one(), Letter::y}},
      fxy{{ring.one(), Letter::x}, {ring.one(), Letter::y}};
  std::vector<QuotientArg<R>> units{q_unit(ring, std::span(fx)), q_unit(ring, std::span(fy)),
                                    q_unit(ring, std::span(fxy))};
  out.s2_units = q_evaluate(standard_polynomial(ring, 2), std::span<const QuotientArg<R>>(units));
  out.s3_units = q_evaluate(standard_polynomial(ring, 3), std::span<const QuotientArg<R>>(units));
  out.verdict.stats.elapsed_ms = clock.elapsed_ms();
  return out;
}

}  // namespace lpi
