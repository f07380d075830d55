#include <gtest/gtest.h>

#include <random>

#include "trio/errors.hpp"
#include "trio/pi_scaled.hpp"
#include "trio/poly.hpp"
#include "trio/rational.hpp"
#include "trio/series.hpp"

using namespace trio;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

Rational random_rational(std::mt19937_64& rng, long span = 40) {
  const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
  const long den = static_cast<long>(rng() % 25) + 1;
  return Rational(mpz_class(num), mpz_class(den));
}

}  // namespace

TEST(Rational, NormalizesOnConstruction) {
  EXPECT_EQ(Rational(mpz_class(6), mpz_class(-4)).to_string(), "-3/2");
  EXPECT_EQ(Rational(mpz_class(0), mpz_class(-7)).to_string(), "0/1");
  EXPECT_EQ(Rational(5).to_string(), "5/1");
  EXPECT_GT(Rational(mpz_class(1), mpz_class(-3)).denominator(), 0);
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(R("-691/2730").to_string(), "-691/2730");
  EXPECT_EQ(R("4/6"), Rational(mpz_class(2), mpz_class(3)));
  EXPECT_EQ(R("7"), Rational(7));
  EXPECT_THROW(R("1/0"), DomainError);
  EXPECT_THROW(R("+1/2"), DomainError);
  EXPECT_THROW(R(" 1/2"), DomainError);
  EXPECT_THROW(R(""), DomainError);
}

TEST(Rational, ArithmeticErrors) {
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
  EXPECT_THROW(Rational(0).inverse(), DomainError);
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DomainError);
  EXPECT_THROW(pow(Rational(0), -1), DomainError);
}

TEST(Rational, PowAndPow2) {
  EXPECT_EQ(Rational::pow2(-3), R("1/8"));
  EXPECT_EQ(Rational::pow2(10), Rational(1024));
  EXPECT_EQ(pow(R("-2/3"), 3), R("-8/27"));
  EXPECT_EQ(pow(R("-2/3"), -2), R("9/4"));
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 10), 0);
}

TEST(SeriesInverse, SpecExamples) {
  EXPECT_EQ(series_inverse(RatSeries({1, 0, 0})), RatSeries({1, 0, 0}));
  EXPECT_EQ(series_inverse(RatSeries({1, 1})), RatSeries({1, -1}));
  EXPECT_EQ(series_inverse(RatSeries({2, 1, 1})), RatSeries({R("1/2"), R("-1/4"), R("-1/8")}));
}

TEST(SeriesInverse, RejectsZeroConstant) {
  EXPECT_THROW(series_inverse(RatSeries({0, 1, 2})), DomainError);
}

TEST(SeriesMul, SpecExamples) {
  EXPECT_EQ(series_mul(RatSeries({1, 1}), RatSeries({1, 1})), RatSeries({1, 2}));
  EXPECT_EQ(series_mul(RatSeries({0, 1}), RatSeries({0, 1})), RatSeries({0, 0}));
  // x^2: 1/12 - 1/4 + 1/6 = 0; these are truncations of (e^x - 1)/x and its inverse.
  EXPECT_EQ(series_mul(RatSeries({1, R("1/2"), R("1/6")}), RatSeries({1, R("-1/2"), R("1/12")})),
            RatSeries({1, 0, 0}));
  EXPECT_THROW(series_mul(RatSeries({1, 1}), RatSeries({1, 1, 1})), DomainError);
}

TEST(SeriesProperty, InverseTimesOriginalIsUnit) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t order = rng() % 33;
    std::vector<Rational> c(order + 1);
    for (auto& x : c) x = random_rational(rng);
    while (c[0].is_zero()) c[0] = random_rational(rng);
    const RatSeries a(c);
    EXPECT_EQ(series_mul(a, series_inverse(a)), RatSeries::unit(order)) << "trial " << trial;
  }
}

TEST(PolyEval, SpecExamples) {
  const RatPoly z2({0, 0, 1});
  EXPECT_EQ(poly_eval(z2, R("1/2")), R("1/4"));
  EXPECT_EQ(poly_eval_gauss(z2, {0, 1}), (GaussRational{-1, 0}));
  const RatPoly quartic({1, 0, 0, 0, 1});
  EXPECT_EQ(poly_eval_gauss(quartic, {0, 1}), (GaussRational{2, 0}));
}

TEST(PolyEval, TrimsAndReportsDegree) {
  EXPECT_EQ(RatPoly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(RatPoly({0, 0}).degree(), -1);
  EXPECT_TRUE(RatPoly(std::vector<Rational>{}).is_zero());
  EXPECT_EQ(RatPoly({1, 2, 3}).reciprocal(4), RatPoly({0, 0, 3, 2, 1}));
  EXPECT_THROW(RatPoly({1, 2, 3}).reciprocal(1), DomainError);
}

TEST(PolyProperty, HornerMatchesPowerSum) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t deg = rng() % 65;
    std::vector<Rational> c(deg + 1);
    for (auto& x : c) x = random_rational(rng);
    const RatPoly p(c);
    const Rational z = random_rational(rng, 5);
    Rational naive, power(1);
    for (const auto& a : c) {
      naive += a * power;
      power *= z;
    }
    EXPECT_EQ(poly_eval(p, z), naive);

    const GaussRational w{random_rational(rng, 3), random_rational(rng, 3)};
    GaussRational gnaive, gpower{1, 0};
    for (const auto& a : c) {
      gnaive = gnaive + GaussRational{a, 0} * gpower;
      gpower = gpower * w;
    }
    EXPECT_EQ(poly_eval_gauss(p, w), gnaive);
  }
}

TEST(PiScaled, CanonicalZeroAndGrades) {
  const PiScaled z(Rational(0), 6);
  EXPECT_EQ(z.pi_pow(), 0);
  const PiScaled a(R("1/6"), 2), b(R("1/90"), 4);
  EXPECT_THROW(a + b, DomainError);
  EXPECT_EQ(a + PiScaled(), a);
  EXPECT_EQ((a * b).pi_pow(), 6);
  EXPECT_EQ((a * b).coeff(), R("1/540"));
}

TEST(PiScaled, JsonRoundTrip) {
  const PiScaled v(R("-2/18243225"), 14);
  EXPECT_EQ(v.to_json(), R"({"coeff":"-2/18243225","pi_pow":14})");
  EXPECT_EQ(PiScaled::from_json(v.to_json()), v);
}

TEST(PiScaledProperty, MultiplicationIsCommutativeAndAssociative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const PiScaled a(random_rational(rng), static_cast<int>(rng() % 10));
    const PiScaled b(random_rational(rng), static_cast<int>(rng() % 10));
    const PiScaled c(random_rational(rng), static_cast<int>(rng() % 10));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    const PiScaled ab = a * b;
    if (!ab.is_zero()) {
      EXPECT_EQ(ab.pi_pow(), a.pi_pow() + b.pi_pow());
      EXPECT_EQ(ab.coeff(), a.coeff() * b.coeff());
    }
  }
}
