#pragma once

#include <vector>

#include "lpi/matrix/algebra.hpp"

namespace lpi {

template <Ring R>
struct NoncentralIdempotent {
  Matrix<R> e;
  Matrix<R> m;  // first element, in enumeration order, with e m != m e
};

template <Ring R>
struct IdempotentReport {
  std::uint64_t idempotents = 0;
  std::vector<NoncentralIdempotent<R>> violators;
};

template <FiniteRing R>
IdempotentReport<R> idempotent_centrality(const AlgebraHandle<R>& h, std::uint64_t cap = kDefaultCap) {
  IdempotentReport<R> out;
  auto elements = enumerate_elements(h, cap);
  for (const auto& e : elements) {
    if (!(e * e == e)) continue;
    ++out.idempotents;
    for (const auto& m : elements)
      if (!(e * m == m * e)) {
        out.violators.push_back({e, m});
        break;
      }
  }
  return out;
}

}  // namespace lpi
