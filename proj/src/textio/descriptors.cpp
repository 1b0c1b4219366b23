#include "lpi/textio/descriptors.hpp"

#include <cctype>

#include "lpi/errors.hpp"

namespace lpi::text {

AlgebraSpec parse_algebra(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos || at < 2)
    throw PreconditionError("bad algebra '" + text + "' (expected e.g. M2@Fp:2, T3@Fp:2, D2@ZZ)");
  AlgebraSpec spec;
  switch (text[0]) {
    case 'M': spec.family = Family::full; break;
    case 'T': spec.family = Family::upper_triangular; break;
    case 'D': spec.family = Family::diagonal; break;
    default: throw PreconditionError("unknown algebra family '" + text.substr(0, 1) + "' (expected M, T or D)");
  }
  const std::string digits = text.substr(1, at - 1);
  if (digits.size() > 2 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw PreconditionError("bad dimension in algebra '" + text + "'");
  spec.n = std::stoul(digits);
  if (spec.n < 1 || spec.n > kMaxDimension)
    throw PreconditionError("algebra dimension must be in 1.." + std::to_string(kMaxDimension));
  spec.ring = parse_ring(text.substr(at + 1));
  return spec;
}

std::string algebra_name(const AlgebraSpec& spec) {
  return family_prefix(spec.family) + std::to_string(spec.n) + "@" + ring_name(spec.ring);
}

namespace {

class MatrixReader {
 public:
  explicit MatrixReader(const std::string& s) : s_(s) {}

  std::vector<std::vector<Integer>> read() {
    std::vector<std::vector<Integer>> rows;
    expect('[');
    do {
      rows.push_back(row());
    } while (take(','));
    expect(']');
    skip();
    if (i_ != s_.size()) fail("trailing characters");
    const std::size_t n = rows.size();
    for (const auto& r : rows)
      if (r.size() != n) fail("matrix is not square");
    return rows;
  }

 private:
  std::vector<Integer> row() {
    std::vector<Integer> r;
    expect('[');
    do {
      r.push_back(entry());
    } while (take(','));
    expect(']');
    return r;
  }

  Integer entry() {
    skip();
    std::string digits;
    if (i_ < s_.size() && s_[i_] == '-') digits += s_[i_++];
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
    if (digits.empty() || digits == "-") fail("expected an integer entry");
    return Integer::parse(digits);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool take(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!take(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw PreconditionError("matrix literal '" + s_ + "': " + msg + " at offset " + std::to_string(i_));
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

std::vector<std::vector<Integer>> parse_matrix_literal(const std::string& text) { return MatrixReader(text).read(); }

}  // namespace lpi::text
