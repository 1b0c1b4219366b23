#include "lpi/checkers/expansion.hpp"

#include <regex>

namespace lpi {

namespace {

FreeWord word_of(std::initializer_list<Syllable> s) { return FreeWord(std::vector<Syllable>(s)); }

}  // namespace

LaurentElement<IntegerRing> stated_s3_form() {
  IntegerRing zz;
  LaurentElement<IntegerRing> e(zz);
  e.add_term(word_of({{2, 1}, {1, 1}, {2, 1}, {1, 1}}), Integer(1));
  e.add_term(word_of({{1, 2}, {2, 2}}), Integer(-1));
  e.add_term(word_of({{2, 1}, {1, 2}, {2, 1}}), Integer(-1));
  e.add_term(word_of({{1, 1}, {2, 2}, {1, 1}}), Integer(1));
  return e;
}

S3Expansion s3_expand() {
  IntegerRing zz;
  auto x = LaurentElement<IntegerRing>::word(zz, FreeWord::generator(1));
  auto y = LaurentElement<IntegerRing>::word(zz, FreeWord::generator(2));
  auto s3 = expand_at(standard_polynomial(zz, 3), {x, y, x * y});
  auto s2 = expand_at(standard_polynomial(zz, 2), {x, y});
  auto stated = stated_s3_form();
  PrimeField f2(2);
  return {compare_expansions(s3, stated), compare_expansions(s3.mapped(f2), stated.mapped(f2)), std::move(s2)};
}

std::string xy_text(const std::string& canonical) {
  static const std::regex x1("x1(?![0-9])");
  static const std::regex x2("x2(?![0-9])");
  return std::regex_replace(std::regex_replace(canonical, x1, "X"), x2, "Y");
}

}  // namespace lpi
