#include <gtest/gtest.h>

#include "lpi/matrix/algebra.hpp"
#include "lpi/matrix/evaluate.hpp"
#include "lpi/textio/descriptors.hpp"
#include "lpi/textio/parser.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace lpi;

namespace {

IntegerRing zz;
PrimeField f2(2);

template <Ring R>
Matrix<R> E(const R& ring, std::size_t i, std::size_t j, std::size_t n = 2) {
  return Matrix<R>::unit(ring, n, i, j);
}

oracle::IntMatrix as_int(const Matrix<PrimeField>& m) {
  oracle::IntMatrix out(m.n(), std::vector<std::int64_t>(m.n()));
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) out[i][j] = m.at(i, j).value();
  return out;
}

}  // namespace

TEST(MatrixArithmetic, UnitProducts) {
  EXPECT_EQ(E(zz, 2, 1) * E(zz, 1, 2), E(zz, 2, 2));
  EXPECT_TRUE((E(zz, 1, 2) * E(zz, 1, 2)).is_zero());
  for (std::uint64_t k = 1; k <= 16; ++k) EXPECT_EQ(mat_power(E(zz, 1, 1), k), E(zz, 1, 1));
  EXPECT_TRUE(mat_power(E(zz, 1, 2), 0).is_identity());
}

TEST(MatrixArithmetic, MismatchedShapesOrRings) {
  EXPECT_THROW(E(zz, 1, 1, 2) + E(zz, 1, 1, 3), PreconditionError);
  PrimeField f3(3);
  EXPECT_THROW(E(f2, 1, 1) * E(f3, 1, 1), RingMismatch);
}

TEST(MatrixInverse, Examples) {
  EXPECT_EQ(*mat_inverse(Matrix<IntegerRing>::identity(zz, 3)), Matrix<IntegerRing>::identity(zz, 3));
  auto shear = Matrix<IntegerRing>::from_rows(zz, {{1, 1}, {0, 1}});
  EXPECT_EQ(*mat_inverse(shear), Matrix<IntegerRing>::from_rows(zz, {{1, -1}, {0, 1}}));
  EXPECT_FALSE(mat_inverse(E(zz, 1, 1)).has_value());
  // Invertible over QQ but not over ZZ.
  EXPECT_FALSE(mat_inverse(Matrix<IntegerRing>::from_rows(zz, {{2, 0}, {0, 1}})).has_value());
}

TEST(MatrixInverse, RandomUnitsInvertExactly) {
  PrimeField f101(101);
  AlgebraHandle<PrimeField> hp(Family::full, 3, f101);
  AlgebraHandle<IntegerRing> hz(Family::full, 2, zz);
  for (std::uint64_t i = 0; i < 1'000; ++i) {
    Rng rng = substream(41, i);
    auto u = sample_unit(hp, rng);
    auto inv = *mat_inverse(u);
    ASSERT_TRUE((u * inv).is_identity());
    ASSERT_TRUE((inv * u).is_identity());
    ASSERT_NE(oracle::leibniz_det(as_int(u), 101), 0);
    auto v = sample_unit(hz, rng);
    auto vinv = *mat_inverse(v);
    ASSERT_TRUE((v * vinv).is_identity());
    ASSERT_TRUE((vinv * v).is_identity());
  }
}

TEST(AlgebraHandle, InverseStaysInFamily) {
  PrimeField f3(3);
  AlgebraHandle<PrimeField> t(Family::upper_triangular, 2, f3);
  auto m = Matrix<PrimeField>::from_rows(f3, {{1, 2}, {0, 2}});
  auto inv = t.inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_TRUE(t.contains(*inv));
  AlgebraHandle<PrimeField> d(Family::diagonal, 2, f3);
  EXPECT_FALSE(d.contains(m));
}

TEST(Enumeration, UnitCountsMatchGLOrder) {
  for (std::uint64_t q : {2u, 3u})
    for (std::size_t n = 1; n <= 3; ++n) {
      if (q == 3 && n == 3) continue;  // 3^9 elements; covered by the formula below
      AlgebraHandle<PrimeField> h(Family::full, n, PrimeField(q));
      EXPECT_EQ(enumerate_units(h).size(), oracle::gl_order(n, q)) << "n=" << n << " q=" << q;
    }
  AlgebraHandle<PrimeField> h(Family::full, 3, PrimeField(3));
  EXPECT_EQ(enumerate_units(h).size(), oracle::gl_order(3, 3));
}

TEST(Enumeration, SquareZeroCounts) {
  AlgebraHandle<PrimeField> m2(Family::full, 2, f2);
  AlgebraHandle<PrimeField> t2(Family::upper_triangular, 2, f2);
  EXPECT_EQ(enumerate_square_zero(m2).size(), 4u);
  auto t = enumerate_square_zero(t2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_TRUE(t[0].is_zero());
  EXPECT_EQ(t[1], E(f2, 1, 2));
}

TEST(Enumeration, SquareZeroCrossCheckAgainstBruteForce) {
  for (auto family : {Family::full, Family::upper_triangular}) {
    AlgebraHandle<PrimeField> h(family, 2, f2);
    auto sz = enumerate_square_zero(h);
    std::set<oracle::IntMatrix> expected;
    for (const auto& m : oracle::all_matrices(2, 2)) {
      if (family == Family::upper_triangular && m[1][0] != 0) continue;
      if (oracle::is_zero(oracle::multiply(m, m, 2))) expected.insert(m);
    }
    std::set<oracle::IntMatrix> got;
    for (const auto& m : sz) {
      EXPECT_TRUE((m * m).is_zero());
      got.insert(as_int(m));
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(Enumeration, RowMajorOrderAndIndexRoundTrip) {
  AlgebraHandle<PrimeField> h(Family::full, 2, f2);
  ElementEnumeration<PrimeField> en(h, kDefaultCap);
  auto brute = oracle::all_matrices(2, 2);
  ASSERT_EQ(en.size(), brute.size());
  for (std::uint64_t i = 0; i < en.size(); ++i) {
    EXPECT_EQ(as_int(en.at(i)), brute[i]);
    EXPECT_EQ(en.index_of(en.at(i)), i);
  }
}

TEST(Enumeration, CapIsEnforced) {
  AlgebraHandle<PrimeField> h(Family::full, 3, PrimeField(101));
  EXPECT_THROW(enumerate_elements(h), CapExceeded);
  AlgebraHandle<PrimeField> small(Family::full, 2, f2);
  EXPECT_THROW(enumerate_elements(small, 15), CapExceeded);
  EXPECT_NO_THROW(enumerate_elements(small, 16));
}

TEST(Sampling, SquareZeroAlwaysSquaresToZero) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto family : {Family::full, Family::upper_triangular, Family::diagonal}) {
      AlgebraHandle<PrimeField> hp(family, n, PrimeField(101));
      AlgebraHandle<IntegerRing> hz(family, n, zz);
      for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = substream(42, i);
        auto a = sample_square_zero(hp, rng);
        auto b = sample_square_zero(hz, rng);
        ASSERT_TRUE((a * a).is_zero());
        ASSERT_TRUE((b * b).is_zero());
        ASSERT_TRUE(hp.contains(a));
        ASSERT_TRUE(hz.contains(b));
      }
    }
}

TEST(Sampling, UnitsHaveNonzeroDeterminant) {
  PrimeField f101(101);
  AlgebraHandle<PrimeField> h(Family::full, 2, f101);
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng = substream(43, i);
    EXPECT_NE(oracle::leibniz_det(as_int(sample_unit(h, rng)), 101), 0);
  }
}

TEST(Sampling, FixedSeedGivesIdenticalSequences) {
  AlgebraHandle<IntegerRing> h(Family::full, 3, zz);
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng a = substream(99, i), b = substream(99, i);
    EXPECT_EQ(sample_element(h, a), sample_element(h, b));
    EXPECT_EQ(sample_square_zero(h, a), sample_square_zero(h, b));
  }
  Rng a = substream(99, 0), b = substream(100, 0);
  EXPECT_NE(sample_element(h, a), sample_element(h, b));
}

TEST(Evaluate, CommutatorOnEqualUnitsVanishes) {
  PrimeField f5(5);
  AlgebraHandle<PrimeField> h(Family::full, 2, f5);
  auto e = text::to_laurent(text::parse("1 - x1*x2*x1^-1*x2^-1"), f5);
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = substream(44, i);
    auto u = sample_unit(h, rng);
    std::vector<Matrix<PrimeField>> t{u, u};
    EXPECT_TRUE(evaluate(e, std::span<const Matrix<PrimeField>>(t)).is_zero());
  }
}

TEST(Evaluate, StandardPolynomialOnUnitMatrices) {
  PrimeField f3(3);
  auto s2 = text::to_laurent(text::parse("S(2)"), f3);
  std::vector<Matrix<PrimeField>> t{E(f3, 1, 1), E(f3, 1, 2)};
  EXPECT_EQ(evaluate(s2, std::span<const Matrix<PrimeField>>(t)), E(f3, 1, 2));
}

TEST(Evaluate, NegativeExponentAtNonUnit) {
  auto e = text::to_laurent(text::parse("x1^-1"), zz);
  std::vector<Matrix<IntegerRing>> t{E(zz, 1, 1)};
  EXPECT_THROW(evaluate(e, std::span<const Matrix<IntegerRing>>(t)), NotInvertible);
}

TEST(Evaluate, UnassignedVariable) {
  auto e = text::to_laurent(text::parse("x1*x3"), zz);
  std::vector<Matrix<IntegerRing>> t{E(zz, 1, 1), E(zz, 1, 1)};
  EXPECT_THROW(evaluate(e, std::span<const Matrix<IntegerRing>>(t)), PreconditionError);
}

TEST(EvaluateProperties, HomomorphismOnUnits) {
  auto r = props::evaluation_homomorphism(45);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Descriptors, AlgebraAndMatrixLiterals) {
  auto spec = text::parse_algebra("T3@Fp:2");
  EXPECT_EQ(spec.family, Family::upper_triangular);
  EXPECT_EQ(spec.n, 3u);
  EXPECT_EQ(text::algebra_name(spec), "T3@Fp:2");
  EXPECT_EQ(text::algebra_name(text::parse_algebra("D2@ZZ")), "D2@ZZ");
  EXPECT_THROW(text::parse_algebra("X2@ZZ"), PreconditionError);
  EXPECT_THROW(text::parse_algebra("M7@ZZ"), PreconditionError);
  EXPECT_THROW(text::parse_algebra("M2@Fp:9"), PreconditionError);
  auto rows = text::parse_matrix_literal("[[0, 1], [-3, 0]]");
  EXPECT_EQ(rows[1][0], Integer(-3));
  EXPECT_THROW(text::parse_matrix_literal("[[0,1],[0]]"), PreconditionError);
  EXPECT_THROW(text::parse_matrix_literal("[[0,1],[0,0]"), PreconditionError);
  AlgebraHandle<IntegerRing> t2(Family::upper_triangular, 2, zz);
  EXPECT_THROW(text::matrix_literal("[[0,0],[1,0]]", t2), PreconditionError);
}
