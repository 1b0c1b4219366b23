#include <gtest/gtest.h>

#include "lpi/group_algebra/lpi.hpp"
#include "lpi/quotient/quotient.hpp"
#include "lpi/textio/parser.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace lpi;

namespace {

IntegerRing zz;
using QZ = QuotientElement<IntegerRing>;

QZ Q(const std::string& s) { return text::to_quotient(text::parse(s), zz); }
QZ X() { return QZ::letter(zz, Letter::x); }
QZ Y() { return QZ::letter(zz, Letter::y); }

}  // namespace

TEST(AlternatingWords, JunctionRule) {
  auto x = AlternatingWord(Letter::x, 1);
  auto xy = AlternatingWord::from_letters("xy");
  auto yx = AlternatingWord::from_letters("yx");
  EXPECT_FALSE((x * x).has_value());
  EXPECT_FALSE((xy * yx).has_value());
  ASSERT_TRUE((xy * xy).has_value());
  EXPECT_EQ(*(xy * xy), AlternatingWord::from_letters("xyxy"));
  EXPECT_EQ(*(AlternatingWord() * yx), yx);
  EXPECT_EQ(AlternatingWord::from_letters("xyx").last(), Letter::x);
  EXPECT_THROW(AlternatingWord::from_letters("xxy"), PreconditionError);
}

TEST(AlternatingWords, ShortlexOrder) {
  EXPECT_LT(AlternatingWord(), AlternatingWord(Letter::x, 1));
  EXPECT_LT(AlternatingWord(Letter::x, 1), AlternatingWord(Letter::y, 1));
  EXPECT_LT(AlternatingWord(Letter::y, 1), AlternatingWord(Letter::x, 2));
}

TEST(QuotientElements, Products) {
  EXPECT_TRUE((X() * X()).is_zero());
  EXPECT_TRUE(((X() * Y()) * (Y() * X())).is_zero());
  EXPECT_EQ((X() * Y()) * (X() * Y()), Q("x*y*x*y"));
  EXPECT_EQ(Q("(1 + x)^2"), Q("1 + 2*x"));
  EXPECT_EQ(Q("(x + y)^2"), Q("x*y + y*x"));
  EXPECT_EQ(q_power(Q("x + y"), 3), Q("x*y*x + y*x*y"));
  EXPECT_TRUE(q_power(Q("x"), 2).is_zero());
  EXPECT_EQ(q_power(Q("x"), 0), QZ::one(zz));
}

TEST(QuotientElements, Printing) {
  EXPECT_EQ(Q("0").str(), "0");
  EXPECT_EQ(Q("y*x - 2*x*y + 3").str(), "3 - 2*x*y + y*x");
}

TEST(QuotientUnits, ElementaryInverse) {
  std::vector<ElementaryFactor<IntegerRing>> f{{Integer(1), Letter::x}};
  auto u = q_unit(zz, std::span<const ElementaryFactor<IntegerRing>>(f));
  EXPECT_EQ(u.value(), Q("1 + x"));
  EXPECT_EQ(u.inverse(), Q("1 - x"));
}

TEST(QuotientUnits, ProductOfTwoFactors) {
  std::vector<ElementaryFactor<IntegerRing>> f{{Integer(1), Letter::x}, {Integer(1), Letter::y}};
  auto u = q_unit(zz, std::span<const ElementaryFactor<IntegerRing>>(f));
  EXPECT_EQ(u.value(), Q("1 + x + y + x*y"));
  EXPECT_EQ(u.inverse(), Q("1 - x - y + y*x"));
  EXPECT_EQ(u.value() * u.inverse(), QZ::one(zz));
  EXPECT_EQ(u.inverse() * u.value(), QZ::one(zz));
}

TEST(QuotientUnits, NonElementaryRejected) {
  EXPECT_THROW(as_elementary_factor(Q("1 + x*y")), PreconditionError);
  EXPECT_THROW(as_elementary_factor(Q("2 + x")), PreconditionError);
  auto f = as_elementary_factor(Q("1 - 3*y"));
  EXPECT_EQ(f.letter, Letter::y);
  EXPECT_EQ(f.coefficient, Integer(-3));
  EXPECT_EQ(Q("(1 + x)^-1"), Q("1 - x"));
  EXPECT_THROW(Q("(1 + x*y)^-1"), PreconditionError);
}

TEST(QuotientEvaluate, Substitution) {
  auto e = text::to_laurent(text::parse("x1*x2 - x2*x1"), zz);
  std::vector<QuotientArg<IntegerRing>> args{X(), Y()};
  EXPECT_EQ(q_evaluate(e, std::span<const QuotientArg<IntegerRing>>(args)), Q("x*y - y*x"));
}

TEST(QuotientEvaluate, NegativeExponentNeedsCertificate) {
  auto e = text::to_laurent(text::parse("x1^-1"), zz);
  std::vector<QuotientArg<IntegerRing>> plain{Q("1 + x")};
  EXPECT_THROW(q_evaluate(e, std::span<const QuotientArg<IntegerRing>>(plain)), NotInvertible);
  std::vector<ElementaryFactor<IntegerRing>> f{{Integer(2), Letter::x}};
  std::vector<QuotientArg<IntegerRing>> certified{q_unit(zz, std::span<const ElementaryFactor<IntegerRing>>(f))};
  EXPECT_EQ(q_evaluate(e, std::span<const QuotientArg<IntegerRing>>(certified)), Q("1 - 2*x"));
}

TEST(QuotientEvaluate, StandardPolynomials) {
  std::vector<QuotientArg<IntegerRing>> xy{X(), Y()};
  auto s2 = q_evaluate(standard_polynomial(zz, 2), std::span<const QuotientArg<IntegerRing>>(xy));
  EXPECT_EQ(s2, Q("x*y - y*x"));
  std::vector<QuotientArg<IntegerRing>> four{X(), Y(), Q("x*y"), Q("y*x")};
  EXPECT_TRUE(q_evaluate(standard_polynomial(zz, 4), std::span<const QuotientArg<IntegerRing>>(four)).is_zero());
  std::vector<QuotientArg<IntegerRing>> three{X(), Y(), Q("x*y")};
  auto s3 = q_evaluate(standard_polynomial(zz, 3), std::span<const QuotientArg<IntegerRing>>(three));
  EXPECT_FALSE(s3.is_zero());
}

TEST(QuotientEvaluate, NonzeroOverF5) {
  PrimeField f5(5);
  using QF = QuotientElement<PrimeField>;
  std::vector<QuotientArg<PrimeField>> xy{QF::letter(f5, Letter::x), QF::letter(f5, Letter::y)};
  EXPECT_FALSE(q_evaluate(standard_polynomial(f5, 2), std::span<const QuotientArg<PrimeField>>(xy)).is_zero());
}

TEST(QuotientProperties, Associativity) {
  for (std::uint64_t i = 0; i < props::kCases; ++i) {
    Rng rng = substream(51, i);
    auto a = props::random_quotient(rng, 4, 5);
    auto b = props::random_quotient(rng, 4, 5);
    auto c = props::random_quotient(rng, 4, 5);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(QuotientProperties, JunctionRuleMatchesFreeAlgebraRewriting) {
  auto r = props::quotient_junction(52);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
