#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "lpi/checkers/annihilator.hpp"
#include "lpi/checkers/bounds.hpp"
#include "lpi/checkers/expansion.hpp"
#include "lpi/checkers/idempotents.hpp"
#include "lpi/checkers/identity.hpp"
#include "lpi/checkers/nilpotency.hpp"
#include "lpi/checkers/quotient_check.hpp"
#include "lpi/textio/parser.hpp"
#include "support/oracles.hpp"

using namespace lpi;

namespace {

IntegerRing zz;
PrimeField f2(2);

oracle::IntMatrix as_int(const Matrix<PrimeField>& m) {
  oracle::IntMatrix out(m.n(), std::vector<std::int64_t>(m.n()));
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) out[i][j] = m.at(i, j).value();
  return out;
}

oracle::IntMatrix int_identity(std::size_t n) {
  oracle::IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

oracle::IntMatrix add(const oracle::IntMatrix& a, const oracle::IntMatrix& b, std::int64_t p, std::int64_t scale = 1) {
  auto out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = oracle::reduce(a[i][j] + scale * b[i][j], p);
  return out;
}

bool upper(const oracle::IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j]) return false;
  return true;
}

// Largest nilpotency index of bacu over a^2 = 0, bc = 0 in T_n(F_2), or 0 if
// some product is not nilpotent.
std::uint64_t brute_nil_exponent(std::size_t n) {
  std::vector<oracle::IntMatrix> all;
  for (auto& m : oracle::all_matrices(n, 2))
    if (upper(m)) all.push_back(std::move(m));
  std::uint64_t worst = 1;
  for (const auto& a : all) {
    if (!oracle::is_zero(oracle::multiply(a, a, 2))) continue;
    for (const auto& b : all)
      for (const auto& c : all) {
        if (!oracle::is_zero(oracle::multiply(b, c, 2))) continue;
        auto bac = oracle::multiply(oracle::multiply(b, a, 2), c, 2);
        for (const auto& u : all) {
          auto x = oracle::multiply(bac, u, 2);
          auto p = x;
          std::uint64_t k = 1;
          while (!oracle::is_zero(p) && k <= n + 1) {
            p = oracle::multiply(p, x, 2);
            ++k;
          }
          if (k > n + 1) return 0;
          worst = std::max(worst, k);
        }
      }
  }
  return worst;
}

// Dense polynomials mod p, low degree first.
using Poly = std::vector<std::int64_t>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = oracle::reduce(out[i + j] + a[i] * b[j], p);
  return trim(out);
}

Poly poly_add(const Poly& a, const Poly& b, std::int64_t p, std::int64_t sign = 1) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = oracle::reduce((i < a.size() ? a[i] : 0) + sign * (i < b.size() ? b[i] : 0), p);
  return trim(out);
}

// det(X I - m) by cofactor expansion over polynomial entries.
Poly char_poly(const std::vector<std::vector<Poly>>& a, std::int64_t p) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Poly det;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    det = poly_add(det, poly_mul(a[0][j], char_poly(minor, p), p), p, j % 2 ? -1 : 1);
  }
  return det;
}

Poly char_poly(const oracle::IntMatrix& m, std::int64_t p) {
  std::vector<std::vector<Poly>> a(m.size(), std::vector<Poly>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = trim({oracle::reduce(-m[i][j], p), i == j ? 1 : 0});
  return char_poly(a, p);
}

bool divides(const Poly& d, Poly a, std::int64_t p) {
  std::int64_t inv = 1;
  while (oracle::reduce(inv * d.back(), p) != 1) ++inv;
  while (a.size() >= d.size()) {
    std::int64_t c = oracle::reduce(a.back() * inv, p);
    std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] = oracle::reduce(a[shift + i] - c * d[i], p);
    a = trim(a);
  }
  return a.empty();
}

oracle::IntMatrix poly_at(const Poly& f, const oracle::IntMatrix& m, std::int64_t p) {
  oracle::IntMatrix acc(m.size(), std::vector<std::int64_t>(m.size(), 0));
  for (std::size_t k = f.size(); k-- > 0;) acc = add(oracle::multiply(acc, m, p), int_identity(m.size()), p, f[k]);
  return acc;
}

Poly as_poly(const UniPoly<PrimeField>& f) {
  Poly out;
  for (const auto& c : f.coefficients()) out.push_back(c.value());
  return out;
}

std::string as_xy(const FreeWord& w) {
  std::string s;
  for (int g : oracle::letters_of(w)) s += g == 1 ? 'X' : 'Y';
  return s;
}

std::vector<Zp> scalars(const PrimeField& f, std::initializer_list<std::int64_t> v) {
  std::vector<Zp> out;
  for (auto x : v) out.push_back(f.from_int(x));
  return out;
}

}  // namespace

// ---- identity checking ----

TEST(CheckLpi, PrefilterRejectsNonzeroCoefficientSum) {
  AlgebraHandle<IntegerRing> h(Family::full, 2, zz);
  auto v = check_lpi(h, text::to_laurent(text::parse("2 - x1*x2"), zz), SearchConfig{});
  EXPECT_EQ(v.outcome, Outcome::counterexample);
  EXPECT_TRUE(v.prefilter);
  ASSERT_TRUE(v.witness);
  for (const auto& m : *v.witness) EXPECT_TRUE(m.is_identity());
}

TEST(CheckLpi, AmitsurLevitzkiFormHoldsOnM2F2) {
  AlgebraHandle<PrimeField> h(Family::full, 2, f2);
  auto v = check_lpi(h, amitsur_levitzki_lpi(f2, 2), SearchConfig{});
  EXPECT_EQ(v.outcome, Outcome::holds);
  EXPECT_TRUE(v.units_only);
  EXPECT_EQ(v.stats.evaluations, 6u * 6u * 6u * 6u);
}

TEST(CheckLpi, S3FailsOnM2F2AndWitnessIsGenuine) {
  AlgebraHandle<PrimeField> h(Family::full, 2, f2);
  auto v = check_lpi(h, standard_polynomial(f2, 3), SearchConfig{});
  ASSERT_EQ(v.outcome, Outcome::counterexample);
  ASSERT_EQ(v.witness->size(), 3u);
  std::vector<oracle::IntMatrix> t;
  for (const auto& m : *v.witness) t.push_back(as_int(m));
  std::vector<int> perm{0, 1, 2};
  oracle::IntMatrix sum(2, std::vector<std::int64_t>(2, 0));
  do {
    auto prod = int_identity(2);
    for (int i : perm) prod = oracle::multiply(prod, t[static_cast<std::size_t>(i)], 2);
    sum = add(sum, prod, 2, oracle::permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_FALSE(oracle::is_zero(sum));
}

TEST(CheckLpi, CommutatorHoldsOnM1) {
  AlgebraHandle<PrimeField> h(Family::full, 1, PrimeField(7));
  EXPECT_EQ(check_lpi(h, standard_polynomial(PrimeField(7), 2), SearchConfig{}).outcome, Outcome::holds);
}

TEST(CheckLpi, AmitsurLevitzkiViaAlVerify) {
  EXPECT_EQ(al_verify(2, 2, SearchConfig{}).outcome, Outcome::holds);
  EXPECT_EQ(al_verify(2, 2, SearchConfig{}).stats.evaluations, 65536u);
  EXPECT_EQ(al_verify(2, 2, SearchConfig{}, 3).outcome, Outcome::counterexample);
}

TEST(CheckLpi, WorkerCountDoesNotChangeTheAnswer) {
  PrimeField f3(3);
  AlgebraHandle<PrimeField> h(Family::full, 2, f3);
  auto e = standard_polynomial(f3, 3);
  for (Mode mode : {Mode::exhaustive, Mode::random}) {
    SearchConfig one;
    one.mode = mode;
    one.seed = 17;
    one.budget = 500;
    SearchConfig three = one;
    three.workers = 3;
    auto a = check_lpi(h, e, one);
    auto b = check_lpi(h, e, three);
    EXPECT_EQ(a.outcome, b.outcome);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.stats.evaluations, b.stats.evaluations);
  }
}

TEST(CheckLpi, CapExceededInExhaustiveMode) {
  AlgebraHandle<PrimeField> h(Family::full, 3, PrimeField(5));
  SearchConfig cfg;
  cfg.cap = 1000;
  EXPECT_THROW(check_lpi(h, standard_polynomial(PrimeField(5), 2), cfg), CapExceeded);
}

TEST(CheckGroupIdentity, SquaringIsNotALaw) {
  AlgebraHandle<PrimeField> h(Family::full, 2, f2);
  auto v = check_group_identity(h, FreeWord::generator(1, 2), SearchConfig{});
  ASSERT_EQ(v.outcome, Outcome::counterexample);
  auto x = as_int((*v.witness)[0]);
  EXPECT_NE(oracle::multiply(x, x, 2), int_identity(2));
}

TEST(CheckGroupIdentity, ExponentOfGL2F2) {
  // GL_2(F_2) is isomorphic to S_3, so x^6 = 1 and [x,y]^3 = 1 are laws.
  AlgebraHandle<PrimeField> h(Family::full, 2, f2);
  EXPECT_EQ(check_group_identity(h, FreeWord::generator(1, 6), SearchConfig{}).outcome, Outcome::holds);
  EXPECT_EQ(check_group_identity(h, text::parse_word("(x1*x2*x1^-1*x2^-1)^3"), SearchConfig{}).outcome, Outcome::holds);
}

// ---- nilpotency ----

TEST(MinimalPolynomial, Examples) {
  auto mu = minimal_polynomial(Matrix<PrimeField>::unit(f2, 2, 1, 1));
  EXPECT_EQ(as_poly(mu), (Poly{0, 1, 1}));
  EXPECT_EQ(as_poly(minimal_polynomial(Matrix<PrimeField>::identity(f2, 3))), (Poly{1, 1}));
  auto nz = minimal_polynomial(Matrix<IntegerRing>::unit(zz, 2, 1, 2));
  EXPECT_EQ(nz.degree(), Degree::finite(2));
  EXPECT_EQ(nz.coefficient(0), Rational(0));
  EXPECT_EQ(nz.coefficient(1), Rational(0));
}

TEST(MinimalPolynomial, AnnihilatesDividesCharpolyAndIsMinimal) {
  const std::int64_t p = 3;
  PrimeField f3(3);
  AlgebraHandle<PrimeField> h3(Family::full, 3, f3);
  std::vector<Matrix<PrimeField>> cases;
  for (const auto& m : enumerate_elements(AlgebraHandle<PrimeField>(Family::full, 2, f3))) cases.push_back(m);
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = substream(61, i);
    cases.push_back(sample_element(h3, rng));
  }
  for (const auto& m : cases) {
    auto mu = as_poly(minimal_polynomial(m));
    auto im = as_int(m);
    ASSERT_FALSE(mu.empty());
    ASSERT_EQ(mu.back(), 1);
    ASSERT_LE(mu.size() - 1, m.n());
    ASSERT_TRUE(oracle::is_zero(poly_at(mu, im, p))) << m.str();
    ASSERT_TRUE(divides(mu, char_poly(im, p), p)) << m.str();
    // No monic polynomial of smaller degree annihilates m.
    const std::size_t d = mu.size() - 1;
    for (std::size_t k = 0; k < d; ++k) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= p;
      for (std::uint64_t code = 0; code < total; ++code) {
        Poly g(k + 1, 0);
        g[k] = 1;
        std::uint64_t rest = code;
        for (std::size_t i = 0; i < k; ++i, rest /= p) g[i] = static_cast<std::int64_t>(rest % p);
        ASSERT_FALSE(oracle::is_zero(poly_at(g, im, p))) << m.str();
      }
    }
  }
}

TEST(NilpotencyIndex, Examples) {
  EXPECT_EQ(nilpotency_index(Matrix<IntegerRing>::unit(zz, 3, 1, 2), 8), 2u);
  auto j3 = Matrix<IntegerRing>::unit(zz, 3, 1, 2) + Matrix<IntegerRing>::unit(zz, 3, 2, 3);
  EXPECT_EQ(nilpotency_index(j3, 8), 3u);
  EXPECT_EQ(nilpotency_index(j3, 2), std::nullopt);
  EXPECT_EQ(nilpotency_index(Matrix<IntegerRing>::unit(zz, 2, 1, 1), 8), std::nullopt);
}

TEST(NilExponentSearch, UpperTriangularOverF2MatchesBruteForce) {
  for (std::size_t n : {2u, 3u}) {
    AlgebraHandle<PrimeField> h(Family::upper_triangular, n, f2);
    auto r = nil_exponent_search(h, 8, SearchConfig{});
    auto expected = brute_nil_exponent(n);
    ASSERT_NE(expected, 0u);
    EXPECT_EQ(r.verdict.outcome, Outcome::holds) << "n=" << n;
    ASSERT_TRUE(r.minimal_m);
    EXPECT_EQ(*r.minimal_m, expected) << "n=" << n;
  }
}

TEST(NilExponentSearch, FullMatrixAlgebraHasNonNilpotentProducts) {
  AlgebraHandle<PrimeField> h(Family::full, 2, f2);
  auto r = nil_exponent_search(h, 8, SearchConfig{});
  ASSERT_EQ(r.verdict.outcome, Outcome::counterexample);
  const auto& q = *r.verdict.witness;
  EXPECT_TRUE((q.a * q.a).is_zero());
  EXPECT_TRUE((q.b * q.c).is_zero());
  auto x = as_int(q.b * q.a * q.c * q.u);
  auto p = x;
  for (int k = 0; k < 8; ++k) p = oracle::multiply(p, x, 2);
  EXPECT_FALSE(oracle::is_zero(p));
}

TEST(NilExponentSearch, RandomModeIsReproducible) {
  AlgebraHandle<PrimeField> h(Family::upper_triangular, 3, PrimeField(5));
  SearchConfig cfg;
  cfg.mode = Mode::random;
  cfg.seed = 23;
  cfg.budget = 400;
  auto a = nil_exponent_search(h, 8, cfg);
  cfg.workers = 3;
  auto b = nil_exponent_search(h, 8, cfg);
  EXPECT_EQ(a.verdict.outcome, Outcome::holds);
  EXPECT_EQ(a.minimal_m, b.minimal_m);
  EXPECT_EQ(a.verdict.stats.evaluations, b.verdict.stats.evaluations);
}

TEST(SquareZeroPairs, Classification) {
  auto e12 = Matrix<PrimeField>::unit(f2, 2, 1, 2);
  auto e21 = Matrix<PrimeField>::unit(f2, 2, 2, 1);
  EXPECT_EQ(classify_square_zero_pair(e12, e21, 1), PairClass::skipped_not_nilpotent);
  EXPECT_EQ(classify_square_zero_pair(e12, e12, 1), PairClass::satisfied);
  EXPECT_EQ(classify_square_zero_pair(Matrix<PrimeField>::identity(f2, 2), e12, 1), PairClass::not_square_zero);
}

TEST(SquareZeroPairs, ExhaustiveOverM2F2) {
  AlgebraHandle<PrimeField> h(Family::full, 2, f2);
  auto v = square_zero_nilpotency(h, 1, SearchConfig{});
  EXPECT_EQ(v.outcome, Outcome::holds);
  EXPECT_EQ(v.stats.evaluations, 16u);
  EXPECT_GT(v.stats.skipped, 0u);
}

TEST(VandermondeNil, ComponentsOfXPlusXSquared) {
  PrimeField f5(5);
  UniPoly<PrimeField> f(f5, {f5.zero(), f5.one(), f5.one()});
  auto v = Matrix<PrimeField>::unit(f5, 2, 1, 2);
  auto u = Matrix<PrimeField>::identity(f5, 2);
  auto lambdas = scalars(f5, {1, 2});
  auto r = vandermonde_nil(f, v, u, std::span<const Zp>(lambdas));
  ASSERT_EQ(r.components.size(), 3u);
  EXPECT_TRUE(r.components[0].is_zero());
  EXPECT_EQ(r.components[1], v);
  EXPECT_TRUE(r.components[2].is_zero());
  EXPECT_FALSE(r.positive_components_vanish);
  EXPECT_FALSE(r.nilpotent_at_d.has_value());

  auto three = scalars(f5, {0, 1, 3});
  auto full = vandermonde_nil(f, v, u, std::span<const Zp>(three));
  EXPECT_EQ(full.components, r.components);
}

TEST(VandermondeNil, VanishingProductAndEdgeCases) {
  PrimeField f5(5);
  UniPoly<PrimeField> sq(f5, {f5.zero(), f5.zero(), f5.one()});
  auto v = Matrix<PrimeField>::unit(f5, 2, 1, 2);
  auto u = Matrix<PrimeField>::unit(f5, 2, 1, 1);
  auto lambdas = scalars(f5, {1, 2});
  auto r = vandermonde_nil(sq, v, u, std::span<const Zp>(lambdas));
  EXPECT_TRUE(r.positive_components_vanish);
  EXPECT_EQ(r.nilpotent_at_d, true);

  UniPoly<PrimeField> zero(f5, {});
  EXPECT_EQ(vandermonde_nil(zero, v, u, std::span<const Zp>(lambdas)).nilpotent_at_d, true);

  auto repeated = scalars(f5, {1, 1});
  EXPECT_THROW(vandermonde_nil(sq, v, u, std::span<const Zp>(repeated)), PreconditionError);
  auto one = scalars(f5, {1});
  EXPECT_THROW(vandermonde_nil(sq, v, u, std::span<const Zp>(one)), PreconditionError);
}

// ---- annihilators ----

TEST(PowerCycle, Examples) {
  EXPECT_EQ(power_cycle(Matrix<PrimeField>::unit(f2, 2, 1, 1)), (PowerCycle{1, 2}));
  EXPECT_EQ(power_cycle(Matrix<PrimeField>::unit(f2, 2, 1, 2)), (PowerCycle{2, 3}));
  EXPECT_EQ(power_cycle(Matrix<PrimeField>::identity(f2, 2)), (PowerCycle{1, 2}));
  auto swap = Matrix<PrimeField>::from_rows(f2, {{0, 1}, {1, 0}});
  EXPECT_EQ(power_cycle(swap), (PowerCycle{1, 3}));
}

TEST(FiniteAnnihilator, M1AndM2OverF2) {
  AlgebraHandle<PrimeField> m1(Family::full, 1, f2);
  auto a1 = finite_annihilator(m1);
  EXPECT_EQ(as_poly(a1.g), (Poly{0, 1, 1}));
  EXPECT_EQ(a1.elements, 2u);

  AlgebraHandle<PrimeField> m2(Family::full, 2, f2);
  auto a2 = finite_annihilator(m2);
  EXPECT_EQ(as_poly(a2.g), (Poly{0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1}));
  EXPECT_EQ(a2.pairs_verified, 16u);
  std::uint64_t total = 0;
  for (const auto& [cycle, count] : a2.factors) total += count;
  EXPECT_EQ(total, 16u);

  auto dup = finite_annihilator(m2, true);
  EXPECT_TRUE(dup.with_duplicates);
  EXPECT_GT(dup.g.degree(), a2.g.degree());
  EXPECT_TRUE(divides(as_poly(a2.g), as_poly(dup.g), 2));
}

TEST(FiniteAnnihilator, AnnihilatesEveryElement) {
  AlgebraHandle<PrimeField> h(Family::upper_triangular, 2, PrimeField(3));
  auto a = finite_annihilator(h);
  for (const auto& m : enumerate_elements(h)) EXPECT_TRUE(oracle::is_zero(poly_at(as_poly(a.g), as_int(m), 3)));
}

TEST(InfiniteCounterexample, Examples) {
  auto r = infinite_counterexample(UniPoly<IntegerRing>::binomial_difference(zz, 2, 1));
  EXPECT_EQ(r.t, Integer(2));
  EXPECT_EQ(r.trials, 3u);
  EXPECT_FALSE(r.value.is_zero());
  EXPECT_EQ(infinite_counterexample(UniPoly<IntegerRing>::constant(zz, Integer(5))).t, Integer(0));
  EXPECT_THROW(infinite_counterexample(UniPoly<IntegerRing>(zz, {})), PreconditionError);
}

TEST(InfiniteCounterexample, RandomPolynomialsAlwaysYieldAWitness) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng = substream(71, i);
    auto g = sample_integer_polynomial(rng, 6);
    auto r = infinite_counterexample(g);
    ASSERT_TRUE((r.a * r.a).is_zero());
    ASSERT_TRUE((r.b * r.b).is_zero());
    ASSERT_EQ(unipoly_eval(g, r.a * r.b), r.value);
    ASSERT_FALSE(r.value.is_zero());
  }
}

// ---- bounds ----

TEST(Bounds, Examples) {
  auto b3 = bounds_from_d(Integer(3));
  EXPECT_EQ(b3.max_field_size, Integer(6));
  EXPECT_EQ(b3.max_dimension, Integer(7));
  auto b1 = bounds_from_d(Integer(1));
  EXPECT_EQ(b1.max_field_size, Integer(2));
  EXPECT_EQ(b1.max_dimension, Integer(4));
  EXPECT_EQ(bounds_from_d(Integer(3), Integer(4)).max_dimension, Integer(4));
  EXPECT_THROW(bounds_from_d(Integer(0)), PreconditionError);
}

TEST(Bounds, AgreesWithPowerCount) {
  for (std::int64_t d = 1; d <= 60; ++d)
    for (std::int64_t q : {2, 3, 4, 5, 7}) {
      std::int64_t limit = 4 * d * d, n = 2;
      for (std::int64_t pw = q; pw <= limit; pw *= q) ++n;
      EXPECT_EQ(bounds_from_d(Integer(d), Integer(q)).max_dimension, Integer(n)) << d << " " << q;
    }
}

// ---- expansions ----

TEST(S3Expansion, ComputedSideMatchesFreeAlgebraOracle) {
  auto ex = s3_expand();
  oracle::StringPoly x{{"X", Integer(1)}}, y{{"Y", Integer(1)}}, xy{{"XY", Integer(1)}};
  auto expected = oracle::standard_on_strings({x, y, xy});
  oracle::StringPoly got;
  for (const auto& [w, c] : ex.integers.computed.terms()) oracle::add(got, as_xy(w), c);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(expected.at("XXYY"), Integer(-1));
}

TEST(S3Expansion, DiffersOverIntegersAgreesModTwo) {
  auto ex = s3_expand();
  EXPECT_FALSE(ex.integers.equal);
  EXPECT_TRUE(ex.mod2.equal);
  std::size_t mismatches = 0;
  for (const auto& row : ex.integers.rows) mismatches += !row.match;
  EXPECT_GT(mismatches, 0u);
  oracle::StringPoly s2;
  for (const auto& [w, c] : ex.s2.terms()) oracle::add(s2, as_xy(w), c);
  EXPECT_EQ(s2, (oracle::StringPoly{{"XY", Integer(1)}, {"YX", Integer(-1)}}));
}

TEST(S3Expansion, XYText) {
  EXPECT_EQ(xy_text("x1^2*x2"), "X^2*Y");
  EXPECT_EQ(xy_text("x2*x1*x2"), "Y*X*Y");
}

// ---- idempotents ----

TEST(Idempotents, MatchBruteForce) {
  for (auto family : {Family::full, Family::upper_triangular, Family::diagonal}) {
    AlgebraHandle<PrimeField> h(family, 2, f2);
    std::vector<oracle::IntMatrix> all;
    for (auto& m : oracle::all_matrices(2, 2)) {
      if (family != Family::full && m[1][0]) continue;
      if (family == Family::diagonal && m[0][1]) continue;
      all.push_back(std::move(m));
    }
    std::uint64_t idem = 0, noncentral = 0;
    for (const auto& e : all) {
      if (oracle::multiply(e, e, 2) != e) continue;
      ++idem;
      for (const auto& m : all)
        if (oracle::multiply(e, m, 2) != oracle::multiply(m, e, 2)) {
          ++noncentral;
          break;
        }
    }
    auto r = idempotent_centrality(h);
    EXPECT_EQ(r.idempotents, idem) << h.name();
    EXPECT_EQ(r.violators.size(), noncentral) << h.name();
    for (const auto& v : r.violators) EXPECT_NE(v.e * v.m, v.m * v.e);
  }
}

TEST(Idempotents, KnownCounts) {
  EXPECT_EQ(idempotent_centrality(AlgebraHandle<PrimeField>(Family::full, 2, f2)).violators.size(), 6u);
  EXPECT_TRUE(idempotent_centrality(AlgebraHandle<PrimeField>(Family::diagonal, 2, f2)).violators.empty());
}

// ---- quotient ----

TEST(QuotientPi, S4VanishesOnSamples) {
  auto r = quotient_pi_check(zz, 2, 200, 5);
  EXPECT_EQ(r.verdict.outcome, Outcome::holds);
  EXPECT_EQ(r.verdict.stats.evaluations, 200u);
  EXPECT_FALSE(r.s2_units.is_zero());
  EXPECT_FALSE(r.s3_units.is_zero());
  auto r3 = quotient_pi_check(zz, 2, 200, 5, 3);
  EXPECT_EQ(r3.verdict.stats.evaluations, 200u);
}

TEST(QuotientPi, S2FailsOnSamples) {
  auto r = quotient_pi_check(PrimeField(5), 1, 200, 6);
  ASSERT_EQ(r.verdict.outcome, Outcome::counterexample);
  EXPECT_TRUE(quotient_witness_holds(standard_polynomial(PrimeField(5), 2), *r.verdict.witness));
}
