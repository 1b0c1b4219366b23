#pragma once

#include <optional>

#include "lpi/rings/integer.hpp"

namespace lpi {

struct DegreeBounds {
  Integer max_field_size;  // 2d
  Integer max_dimension;   // floor(2 log_q(2d) + 2)
  Integer q;
};

// Largest n with q^(n-2) <= (2d)^2, which is floor(2 log_q(2d)) + 2.
DegreeBounds bounds_from_d(const Integer& d, const std::optional<Integer>& q = std::nullopt);

}  // namespace lpi
