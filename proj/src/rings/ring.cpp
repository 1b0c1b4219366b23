#include "lpi/rings/ring.hpp"

namespace lpi {

AnyRing parse_ring(const std::string& text) {
  if (text == "ZZ") return IntegerRing{};
  if (text.rfind("Fp:", 0) == 0) {
    std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 12 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw PreconditionError("bad prime in ring literal '" + text + "'");
    return PrimeField(std::stoull(digits));
  }
  throw PreconditionError("unknown ring '" + text + "' (expected ZZ or Fp:<prime>)");
}

std::string ring_name(const AnyRing& ring) {
  return std::visit([](const auto& r) { return r.name(); }, ring);
}

}  // namespace lpi
