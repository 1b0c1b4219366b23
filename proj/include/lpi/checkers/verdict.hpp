#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "lpi/errors.hpp"
#include "lpi/matrix/algebra.hpp"

namespace lpi {

enum class Outcome { holds, counterexample, inconclusive };
enum class Mode { exhaustive, random };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::counterexample: return "counterexample";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "?";
}

inline std::string to_string(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "random"; }

inline Mode parse_mode(const std::string& s) {
  if (s == "exhaustive") return Mode::exhaustive;
  if (s == "random") return Mode::random;
  throw PreconditionError("mode must be 'exhaustive' or 'random', got '" + s + "'");
}

struct SearchConfig {
  Mode mode = Mode::exhaustive;
  std::uint64_t budget = 1000;
  std::uint64_t cap = kDefaultCap;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  SamplingOptions sampling;
};

struct SearchStats {
  Mode mode = Mode::exhaustive;
  std::optional<std::uint64_t> seed;  // random mode only
  std::uint64_t evaluations = 0;
  std::uint64_t skipped = 0;
  std::int64_t elapsed_ms = 0;
  std::string ground;  // what was quantified over, e.g. "units" or "elements"
};

// Result of an identity or nilpotency check. A counterexample always
// carries a witness that has been re-verified independently.
template <class Witness>
struct Verdict {
  Outcome outcome = Outcome::holds;
  std::optional<Witness> witness;
  SearchStats stats;
};

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline SearchStats make_stats(const SearchConfig& cfg, std::string ground) {
  SearchStats s;
  s.mode = cfg.mode;
  if (cfg.mode == Mode::random) s.seed = cfg.seed;
  s.ground = std::move(ground);
  return s;
}

}  // namespace lpi
