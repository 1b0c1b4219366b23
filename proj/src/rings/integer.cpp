#include "lpi/rings/integer.hpp"

#include "lpi/errors.hpp"

namespace lpi {

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw PreconditionError("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw PreconditionError("not an integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

std::optional<std::int64_t> Integer::to_int64() const {
  if (!value_.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value_.get_si());
}

Integer abs(const Integer& v) { return Integer(mpz_class(::abs(v.mpz()))); }

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(r);
}

Integer lcm(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(r);
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Integer(r);
}

Integer divide_exact(const Integer& dividend, const Integer& divisor) {
  if (divisor.is_zero()) throw PreconditionError("division by zero");
  if (!mpz_divisible_p(dividend.mpz().get_mpz_t(), divisor.mpz().get_mpz_t()))
    throw PreconditionError(dividend.str() + " is not divisible by " + divisor.str());
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), dividend.mpz().get_mpz_t(), divisor.mpz().get_mpz_t());
  return Integer(r);
}

std::uint64_t mod_u64(const Integer& v, std::uint64_t modulus) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.mpz().get_mpz_t(), modulus);
  return r.get_ui();
}

}  // namespace lpi
