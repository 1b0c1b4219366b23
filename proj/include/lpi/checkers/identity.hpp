#pragma once

#include <cstdint>
#include <vector>

#include "lpi/checkers/reverify.hpp"
#include "lpi/checkers/search.hpp"
#include "lpi/checkers/verdict.hpp"
#include "lpi/group_algebra/lpi.hpp"
#include "lpi/matrix/algebra.hpp"
#include "lpi/matrix/evaluate.hpp"

namespace lpi {

template <Ring R>
using MatrixTuple = std::vector<Matrix<R>>;

template <Ring R>
struct LpiVerdict : Verdict<MatrixTuple<R>> {
  bool units_only = false;
  // Rejected up front because the coefficients do not sum to zero, with
  // witness (I, ..., I).
  bool prefilter = false;
};

namespace detail {

// Ground set with inverses attached, in canonical enumeration order.
template <FiniteRing R>
std::vector<MatrixArg<R>> ground_args(const AlgebraHandle<R>& h, bool units, std::uint64_t cap) {
  std::vector<MatrixArg<R>> out;
  ElementEnumeration<R> all(h, cap);
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    auto m = all.at(i);
    auto inv = h.inverse(m);
    if (units && !inv) continue;
    out.push_back({std::move(m), std::move(inv)});
  }
  return out;
}

template <Ring R>
std::vector<MatrixArg<R>> sample_args(const AlgebraHandle<R>& h, bool units, std::size_t arity, Rng& rng,
                                      const SamplingOptions& opt) {
  std::vector<MatrixArg<R>> args;
  args.reserve(arity);
  for (std::size_t k = 0; k < arity; ++k) {
    auto m = units ? sample_unit(h, rng, opt) : sample_element(h, rng, opt);
    auto inv = h.inverse(m);
    args.push_back({std::move(m), std::move(inv)});
  }
  return args;
}

template <Ring R>
MatrixTuple<R> values_of(const std::vector<MatrixArg<R>>& args) {
  MatrixTuple<R> t;
  for (const auto& a : args) t.push_back(a.value);
  return t;
}

// Runs `violates(args)` over every tuple (exhaustive) or `budget` sampled
// tuples (random) and returns the scan plus the witness tuple.
template <Ring R, class Violates>
std::pair<ScanResult, std::optional<MatrixTuple<R>>> tuple_search(const AlgebraHandle<R>& h, bool units,
                                                                 std::size_t arity, const SearchConfig& cfg,
                                                                 const Violates& violates) {
  if (cfg.mode == Mode::exhaustive) {
    if constexpr (FiniteRing<R>) {
      auto ground = ground_args(h, units, cfg.cap);
      auto count = bounded_power(ground.size(), arity, cfg.cap);
      if (!count)
        throw CapExceeded(std::to_string(ground.size()) + "^" + std::to_string(arity) + " tuples exceed the cap of " +
                          std::to_string(cfg.cap) + "; use random mode");
      auto tuple_at = [&](std::uint64_t index) {
        std::vector<MatrixArg<R>> args;
        for (auto d : decode_tuple(index, ground.size(), arity)) args.push_back(ground[d]);
        return args;
      };
      ScanResult scan = parallel_scan(*count, cfg.workers, [&](std::uint64_t i) {
        return IndexOutcome{violates(tuple_at(i))};
      });
      std::optional<MatrixTuple<R>> witness;
      if (scan.first_violation) witness = values_of(tuple_at(*scan.first_violation));
      return {scan, witness};
    } else {
      throw PreconditionError("exhaustive mode needs a finite coefficient ring; " + h.name() + " is infinite");
    }
  } else {
    auto tuple_at = [&](std::uint64_t index) {
      Rng rng = substream(cfg.seed, index);
      return sample_args(h, units, arity, rng, cfg.sampling);
    };
    ScanResult scan = parallel_scan(cfg.budget, cfg.workers, [&](std::uint64_t i) {
      return IndexOutcome{violates(tuple_at(i))};
    });
    std::optional<MatrixTuple<R>> witness;
    if (scan.first_violation) witness = values_of(tuple_at(*scan.first_violation));
    return {scan, witness};
  }
}

}  // namespace detail

// Does e vanish on all tuples of A (or of U(A) when e has inverse words)?
template <Ring R>
LpiVerdict<R> check_lpi(const AlgebraHandle<R>& h, const LaurentElement<R>& e, const SearchConfig& cfg) {
  require_same_ring(h.ring(), e.ring());
  Stopwatch clock;
  LpiVerdict<R> v;
  v.units_only = e.has_negative_exponent();
  v.stats = make_stats(cfg, v.units_only ? "units" : "elements");
  const std::size_t arity = static_cast<std::size_t>(e.max_generator());
  const std::size_t n = h.n();

  // On (I, ..., I) every word is I, so e evaluates to (sum of coefficients) I.
  if (!is_zero_element(e.coefficient_sum())) {
    MatrixTuple<R> ones(arity, h.identity());
    if (!reverify::lpi_witness_holds(e, ones, n)) throw InternalError("prefilter witness failed to re-verify");
    v.outcome = Outcome::counterexample;
    v.prefilter = true;
    v.witness = std::move(ones);
    v.stats.evaluations = 1;
    v.stats.elapsed_ms = clock.elapsed_ms();
    return v;
  }
  if (e.is_zero()) {
    v.stats.elapsed_ms = clock.elapsed_ms();
    return v;
  }

  auto [scan, witness] = detail::tuple_search(h, v.units_only, arity, cfg, [&](const std::vector<MatrixArg<R>>& args) {
    return !evaluate<R>(e, args, n).is_zero();
  });
  v.stats.evaluations = scan.evaluations;
  if (witness) {
    if (!reverify::lpi_witness_holds(e, *witness, n))
      throw InternalError("counterexample for " + e.str() + " failed independent re-verification");
    v.outcome = Outcome::counterexample;
    v.witness = std::move(witness);
  }
  v.stats.elapsed_ms = clock.elapsed_ms();
  return v;
}

// S_degree on M_n(F_p); degree defaults to 2n (Amitsur-Levitzki).
inline LpiVerdict<PrimeField> al_verify(int n, std::uint64_t p, const SearchConfig& cfg, int degree = 0) {
  PrimeField field(p);
  AlgebraHandle<PrimeField> h(Family::full, static_cast<std::size_t>(n), field);
  return check_lpi(h, standard_polynomial(field, degree > 0 ? degree : 2 * n), cfg);
}

// Does w evaluate to the identity on every tuple of units?
template <Ring R>
Verdict<MatrixTuple<R>> check_group_identity(const AlgebraHandle<R>& h, const FreeWord& w, const SearchConfig& cfg) {
  Stopwatch clock;
  Verdict<MatrixTuple<R>> v;
  v.stats = make_stats(cfg, "units");
  if (w.is_identity()) return v;
  const std::size_t arity = static_cast<std::size_t>(w.max_generator());
  const auto id = h.identity();
  auto [scan, witness] = detail::tuple_search(h, true, arity, cfg, [&](const std::vector<MatrixArg<R>>& args) {
    return !(evaluate_word<R>(w, args, h.ring(), h.n()) == id);
  });
  v.stats.evaluations = scan.evaluations;
  if (witness) {
    if (!reverify::group_witness_holds(w, *witness, h.ring(), h.n()))
      throw InternalError("group identity witness failed independent re-verification");
    v.outcome = Outcome::counterexample;
    v.witness = std::move(witness);
  }
  v.stats.elapsed_ms = clock.elapsed_ms();
  return v;
}

}  // namespace lpi
