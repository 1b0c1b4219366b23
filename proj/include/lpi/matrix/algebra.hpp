#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lpi/matrix/matrix.hpp"

namespace lpi {

enum class Family { full, upper_triangular, diagonal };

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;
inline constexpr std::size_t kMaxDimension = 6;

inline std::string family_prefix(Family f) {
  switch (f) {
    case Family::full: return "M";
    case Family::upper_triangular: return "T";
    case Family::diagonal: return "D";
  }
  return "?";
}

// Names the algebra a check runs over: M_n, T_n or D_n over a coefficient ring.
template <Ring R>
class AlgebraHandle {
 public:
  AlgebraHandle(Family family, std::size_t n, R ring) : family_(family), n_(n), ring_(std::move(ring)) {
    if (n < 1 || n > kMaxDimension)
      throw PreconditionError("algebra dimension must be in 1.." + std::to_string(kMaxDimension));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (is_free(i, j)) free_.emplace_back(i, j);
  }

  Family family() const { return family_; }
  std::size_t n() const { return n_; }
  const R& ring() const { return ring_; }
  // Number of free entries (the algebra's rank as a module).
  std::size_t dimension() const { return free_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& free_positions() const { return free_; }

  bool is_free(std::size_t i, std::size_t j) const {
    switch (family_) {
      case Family::full: return true;
      case Family::upper_triangular: return i <= j;
      case Family::diagonal: return i == j;
    }
    return false;
  }

  bool contains(const Matrix<R>& m) const {
    if (m.n() != n_ || !(m.ring() == ring_)) return false;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!is_free(i, j) && !is_zero_element(m.at(i, j))) return false;
    return true;
  }

  Matrix<R> identity() const { return Matrix<R>::identity(ring_, n_); }
  Matrix<R> zero() const { return Matrix<R>::zero(ring_, n_); }

  // "M2@Fp:2"
  std::string name() const { return family_prefix(family_) + std::to_string(n_) + "@" + ring_.name(); }

  // Inverse that also lies in the algebra, or nullopt.
  std::optional<Matrix<R>> inverse(const Matrix<R>& m) const {
    auto inv = mat_inverse(m);
    if (inv && !contains(*inv)) return std::nullopt;
    return inv;
  }

 private:
  Family family_;
  std::size_t n_;
  R ring_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;
};

// Exhaustive element access by index, row-major lexicographic by entry:
// index 0 is the zero matrix and the last free entry varies fastest.
template <FiniteRing R>
class ElementEnumeration {
 public:
  ElementEnumeration(const AlgebraHandle<R>& h, std::uint64_t cap) : handle_(h) {
    const std::uint64_t q = h.ring().order();
    count_ = 1;
    for (std::size_t k = 0; k < h.dimension(); ++k) {
      if (count_ > cap / q) throw CapExceeded(h.name() + " has more than " + std::to_string(cap) + " elements; use random mode");
      count_ *= q;
    }
    if (count_ > cap) throw CapExceeded(h.name() + " has more than " + std::to_string(cap) + " elements; use random mode");
  }

  std::uint64_t size() const { return count_; }

  Matrix<R> at(std::uint64_t index) const {
    const auto& ring = handle_.ring();
    const std::uint64_t q = ring.order();
    Matrix<R> m = handle_.zero();
    const auto& pos = handle_.free_positions();
    for (std::size_t k = pos.size(); k-- > 0;) {
      m.at(pos[k].first, pos[k].second) = ring.element(index % q);
      index /= q;
    }
    return m;
  }

  std::uint64_t index_of(const Matrix<R>& m) const {
    std::uint64_t index = 0;
    for (const auto& [i, j] : handle_.free_positions()) index = index * handle_.ring().order() + handle_.ring().index_of(m.at(i, j));
    return index;
  }

 private:
  AlgebraHandle<R> handle_;
  std::uint64_t count_ = 0;
};

template <FiniteRing R, class Pred>
std::vector<Matrix<R>> enumerate_filtered(const AlgebraHandle<R>& h, std::uint64_t cap, Pred&& keep) {
  ElementEnumeration<R> all(h, cap);
  std::vector<Matrix<R>> out;
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    auto m = all.at(i);
    if (keep(m)) out.push_back(std::move(m));
  }
  return out;
}

template <FiniteRing R>
std::vector<Matrix<R>> enumerate_elements(const AlgebraHandle<R>& h, std::uint64_t cap = kDefaultCap) {
  return enumerate_filtered(h, cap, [](const Matrix<R>&) { return true; });
}

template <FiniteRing R>
std::vector<Matrix<R>> enumerate_units(const AlgebraHandle<R>& h, std::uint64_t cap = kDefaultCap) {
  return enumerate_filtered(h, cap, [&](const Matrix<R>& m) { return h.inverse(m).has_value(); });
}

template <FiniteRing R>
std::vector<Matrix<R>> enumerate_square_zero(const AlgebraHandle<R>& h, std::uint64_t cap = kDefaultCap) {
  return enumerate_filtered(h, cap, [](const Matrix<R>& m) { return (m * m).is_zero(); });
}

template <FiniteRing R>
std::vector<Matrix<R>> enumerate_idempotents(const AlgebraHandle<R>& h, std::uint64_t cap = kDefaultCap) {
  return enumerate_filtered(h, cap, [](const Matrix<R>& m) { return m * m == m; });
}

// ---- sampling ----

struct SamplingOptions {
  // Entries of ZZ samples are uniform in [-integer_bound, integer_bound].
  std::int64_t integer_bound = 3;
  std::uint32_t max_retries = 10'000;
};

using Rng = std::mt19937_64;

// Independent, reproducible generator for work item `index` of run `seed`.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

template <Ring R>
ElementOf<R> sample_scalar(const R& ring, Rng& rng, const SamplingOptions& opt = {}) {
  if constexpr (FiniteRing<R>) {
    return ring.element(uniform_below(rng, ring.order()));
  } else {
    std::int64_t v = std::uniform_int_distribution<std::int64_t>(-opt.integer_bound, opt.integer_bound)(rng);
    return ring.from_integer(Integer(v));
  }
}

template <Ring R>
Matrix<R> sample_element(const AlgebraHandle<R>& h, Rng& rng, const SamplingOptions& opt = {}) {
  Matrix<R> m = h.zero();
  for (const auto& [i, j] : h.free_positions()) m.at(i, j) = sample_scalar(h.ring(), rng, opt);
  return m;
}

template <Ring R>
Matrix<R> sample_unit(const AlgebraHandle<R>& h, Rng& rng, const SamplingOptions& opt = {}) {
  for (std::uint32_t attempt = 0; attempt < opt.max_retries; ++attempt) {
    auto m = sample_element(h, rng, opt);
    if (h.inverse(m)) return m;
  }
  throw PreconditionError("sample_unit: retry budget exhausted on " + h.name());
}

// Rank <= 1 square-zero sampler: v w^T with w^T v = 0, plus the zero matrix.
template <Ring R>
Matrix<R> sample_square_zero(const AlgebraHandle<R>& h, Rng& rng, const SamplingOptions& opt = {}) {
  const auto& ring = h.ring();
  const std::size_t n = h.n();
  for (std::uint32_t attempt = 0; attempt < opt.max_retries; ++attempt) {
    std::vector<ElementOf<R>> v(n, ring.zero());
    std::vector<ElementOf<R>> w(n, ring.zero());
    if (h.family() == Family::diagonal || n == 1) return h.zero();
    if (h.family() == Family::upper_triangular) {
      // v lives on rows <= s, w on columns > s: the product is strictly upper.
      std::size_t s = static_cast<std::size_t>(uniform_below(rng, n - 1));
      for (std::size_t i = 0; i <= s; ++i) v[i] = sample_scalar(ring, rng, opt);
      for (std::size_t j = s + 1; j < n; ++j) w[j] = sample_scalar(ring, rng, opt);
    } else {
      for (auto& x : v) x = sample_scalar(ring, rng, opt);
      std::size_t a = static_cast<std::size_t>(uniform_below(rng, n));
      std::size_t b = static_cast<std::size_t>(uniform_below(rng, n - 1));
      if (b >= a) ++b;
      if constexpr (Field<R>) {
        for (auto& x : w) x = sample_scalar(ring, rng, opt);
        if (!is_zero_element(v[a])) {
          // Solve w_a so that w . v = 0.
          auto rest = ring.zero();
          for (std::size_t k = 0; k < n; ++k)
            if (k != a) rest = rest + w[k] * v[k];
          w[a] = -(rest * ring.inverse(v[a]));
        } else {
          w[a] = sample_scalar(ring, rng, opt);
          for (std::size_t k = 0; k < n; ++k)
            if (k != a) w[k] = ring.zero();
        }
      } else {
        auto c = sample_scalar(ring, rng, opt);
        w[a] = c * v[b];
        w[b] = -(c * v[a]);
      }
    }
    Matrix<R> m = h.zero();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i] * w[j];
    if ((m * m).is_zero() && h.contains(m)) return m;
  }
  throw PreconditionError("sample_square_zero: retry budget exhausted on " + h.name());
}

}  // namespace lpi
