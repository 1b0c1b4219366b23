#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace lpi {

// What a search loop learns from one index of its ground space.
struct IndexOutcome {
  bool violation = false;
  bool skipped = false;
  std::uint64_t value = 0;  // aggregated by max
};

struct ScanResult {
  std::optional<std::uint64_t> first_violation;
  std::uint64_t evaluations = 0;  // indices examined in canonical order, up to and including the witness
  std::uint64_t skipped = 0;
  std::uint64_t max_value = 0;
};

// Scans indices [0, count) split into contiguous ranges, one per worker.
// The reported violation is the smallest violating index and the tallies
// cover exactly the indices before it, so the result does not depend on
// the number of workers.
template <class Check>
ScanResult parallel_scan(std::uint64_t count, unsigned workers, const Check& check) {
  constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(count, 1)));
  std::atomic<std::uint64_t> best{none};

  struct Range {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;
    std::uint64_t skipped = 0;
    std::uint64_t max_value = 0;
  };
  std::vector<Range> ranges(workers);
  const std::uint64_t chunk = count / workers;
  const std::uint64_t extra = count % workers;
  std::uint64_t at = 0;
  for (unsigned w = 0; w < workers; ++w) {
    ranges[w].begin = at;
    at += chunk + (w < extra ? 1 : 0);
    ranges[w].end = at;
  }

  auto run = [&](Range& r) {
    for (std::uint64_t i = r.begin; i < r.end; ++i) {
      if (i > best.load(std::memory_order_relaxed)) return;
      IndexOutcome o = check(i);
      if (o.violation) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
      if (o.skipped) ++r.skipped;
      r.max_value = std::max(r.max_value, o.value);
    }
  };

  if (workers == 1) {
    run(ranges[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (auto& r : ranges) pool.emplace_back([&run, &r] { run(r); });
  }

  ScanResult out;
  const std::uint64_t winner = best.load();
  if (winner != none) out.first_violation = winner;
  out.evaluations = winner != none ? winner + 1 : count;
  for (const auto& r : ranges) {
    if (winner != none && r.begin > winner) continue;
    out.skipped += r.skipped;
    out.max_value = std::max(out.max_value, r.max_value);
  }
  return out;
}

// Mixed-radix decode of a tuple index; slot 0 is the most significant digit.
inline std::vector<std::uint64_t> decode_tuple(std::uint64_t index, std::uint64_t base, std::size_t arity) {
  std::vector<std::uint64_t> digits(arity);
  for (std::size_t k = arity; k-- > 0;) {
    digits[k] = index % base;
    index /= base;
  }
  return digits;
}

// base^arity, or nullopt if it exceeds cap.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::size_t arity, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < arity; ++k) {
    if (base != 0 && total > cap / base) return std::nullopt;
    total *= base;
  }
  if (total > cap) return std::nullopt;
  return total;
}

}  // namespace lpi
