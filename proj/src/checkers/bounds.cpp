#include "lpi/checkers/bounds.hpp"

#include "lpi/errors.hpp"

namespace lpi {

DegreeBounds bounds_from_d(const Integer& d, const std::optional<Integer>& q) {
  if (d < Integer(1)) throw PreconditionError("d must be at least 1");
  Integer base = q.value_or(Integer(2));
  if (base < Integer(2)) throw PreconditionError("field size q must be at least 2");
  const Integer two_d = d * Integer(2);
  const Integer square = two_d * two_d;
  Integer e(0);
  Integer power = base;
  while (power <= square) {
    e = e + Integer(1);
    power = power * base;
  }
  return {two_d, e + Integer(2), base};
}

}  // namespace lpi
