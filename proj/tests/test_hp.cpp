#include <gtest/gtest.h>

#include "trio/errors.hpp"
#include "trio/hp/grosswald.hpp"
#include "trio/hp/special.hpp"

using trio::DomainError;
using trio::PrecisionError;
using trio::Rational;
using namespace trio::hp;

namespace {

Real mpfr_pi(Precision p) {
  Real r(p);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real mpfr_gamma_oracle(const Real& x) {
  Real r(x.precision());
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real mpfr_zeta_oracle(const Real& x) {
  Real r(x.precision());
  mpfr_zeta(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

TEST(HpReal, ArithmeticKeepsMinPrecision) {
  const Real a(1L, 100), b(3L, 200);
  EXPECT_EQ((a / b).precision(), 100);
  EXPECT_EQ((b * 2L).precision(), 200);
  EXPECT_TRUE(close(Real::parse("1/3", 200) * 3L, Real(1L, 200), -195));
  EXPECT_TRUE(close(Real::parse("0.125", 64), Real(Rational(1, 8), 64), -200));
}

TEST(HpPi, MatchesMpfrConstant) {
  for (Precision p : {64, 128, 256, 1024, 4096}) {
    EXPECT_TRUE(close(pi(p), mpfr_pi(p), 2 - static_cast<long>(p))) << p;
  }
}

TEST(HpZeta, EvenValuesFromClosedForms) {
  const Precision p = 128;
  const Real pi2 = pi(p) * pi(p);
  EXPECT_TRUE(close(zeta(Real(2L, p), p), pi2 / 6L, -120));
  const Real pi14 = pow(pi(p), 14);
  EXPECT_TRUE(close(zeta(Real(14L, p), p), pi14 * Rational(2, 18243225), -120));
  EXPECT_TRUE(close(zeta(Real(0L, p), p), Real(Rational(-1, 2), p), -120));
  EXPECT_TRUE(close(zeta(Real(-1L, p), p), Real(Rational(-1, 12), p), -120));
}

TEST(HpZeta, AgreesWithMpfrOnRealAxis) {
  for (Precision p : {64, 256, 512}) {
    for (const char* s : {"3", "0.5", "-2.5", "1.0001", "0.999", "25.25"}) {
      const Real x = Real::parse(s, p);
      EXPECT_TRUE(close(zeta(x, p), mpfr_zeta_oracle(x), 8 - static_cast<long>(p)))
          << s << " at " << p;
    }
  }
}

TEST(HpZeta, ScaleSelfConsistency) {
  const Precision p = 192;
  for (const char* s : {"0.5,14.134725", "2,3", "-1.5,0.25", "0.75,-40"}) {
    const Complex z = parse_complex(s, p);
    ZetaPlan a, b;
    const Complex z1 = zeta(z, p, 1.0, &a);
    const Complex z2 = zeta(z, p, 2.0, &b);
    EXPECT_GT(b.n_terms, a.n_terms);
    EXPECT_TRUE(close(z1, z2, 12 - static_cast<long>(p))) << s;
  }
}

TEST(HpZeta, FirstNontrivialZeroIsSmall) {
  const Precision p = 128;
  const Complex rho = parse_complex("0.5,14.134725141734693790457251983562470270784257115699", p);
  EXPECT_LT(log2_abs(abs(zeta(rho, p))), -120);
}

TEST(HpZeta, FunctionalEquationConjugateSymmetry) {
  const Precision p = 128;
  const Complex s = parse_complex("0.3,7.5", p);
  EXPECT_TRUE(close(zeta(conj(s), p), conj(zeta(s, p)), -118));
}

TEST(HpZeta, ErrorsAtPoleAndLowPrecision) {
  EXPECT_THROW(zeta(Real(1L, 128), 128), DomainError);
  EXPECT_THROW(zeta(Real(2L, 32), 32), PrecisionError);
}

TEST(HpZeta, PoleFreeIsOneAtOne) {
  const Precision p = 160;
  EXPECT_TRUE(close(zeta_pole_free(Complex(Real(1L, p)), p), Complex(Real(1L, p)), -150));
  const Complex s = parse_complex("1.25,0.5", p);
  EXPECT_TRUE(close(zeta_pole_free(s, p), (s - 1L) * zeta(s, p), -148));
}

TEST(HpGamma, AgreesWithMpfrOnRealAxis) {
  for (Precision p : {64, 200, 600}) {
    for (const char* s : {"0.5", "1", "7.25", "-2.5", "0.001", "33.3", "-0.75"}) {
      const Real x = Real::parse(s, p);
      const Real g = gamma(x, p);
      const Real oracle = mpfr_gamma_oracle(x);
      EXPECT_TRUE(close(g / oracle, Real(1L, p), 6 - static_cast<long>(p))) << s << " at " << p;
    }
  }
  EXPECT_TRUE(close(gamma(Real(Rational(1, 2), 256), 256), sqrt(pi(256)), -250));
}

TEST(HpGamma, RecurrenceForComplexArguments) {
  const Precision p = 192;
  for (const char* s : {"0.3,1.7", "-3.2,0.4", "5,-9", "0.5,30"}) {
    const Complex z = parse_complex(s, p);
    const Complex lhs = gamma(z + 1L, p);
    const Complex rhs = z * gamma(z, p);
    EXPECT_TRUE(close(lhs / rhs, one_like(lhs), 8 - static_cast<long>(p))) << s;
  }
  EXPECT_THROW(gamma(Real(-3L, 128), 128), DomainError);
}

TEST(HpXi, NormalizationAndReflection) {
  const Precision p = 160;
  EXPECT_TRUE(close(xi(Complex(Real(1L, p)), p), Complex(Real(1L, p)), -150));
  EXPECT_TRUE(close(xi(Complex(Real(0L, p)), p), Complex(Real(1L, p)), -150));
  EXPECT_TRUE(close(xi(parse_complex("0.3", p), p), xi(parse_complex("0.7", p), p), -148));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const Complex s(Real(Rational(i - 1, 2), p), Real(Rational(3 * j - 5, 2), p));
      const Complex t = one_like(s) - s;
      EXPECT_TRUE(close(xi(s, p), xi(t, p), 12 - static_cast<long>(p))) << i << "," << j;
    }
  }
}

TEST(HpXi, AtTwoMatchesProductFormula) {
  // xi(2) = 2 pi^{-1} Gamma(1) zeta(2) = pi / 3.
  const Precision p = 256;
  EXPECT_TRUE(close(xi(Complex(Real(2L, p)), p), Complex(pi(p) / 3L), -246));
}

TEST(HpXi, RealOnCriticalLine) {
  const Precision p = 128;
  const Complex v = xi(parse_complex("0.5,21.02", p), p);
  EXPECT_LT(log2_abs(v.im()), -110 + log2_abs(v.re()));
}

TEST(HpGrosswald, FirstTermBound) {
  const Precision p = 192;
  const GrosswaldValue v = grosswald_F(3, parse_complex("0,1", p), p);
  EXPECT_TRUE(v.value.is_real() || log2_abs(v.value.im()) < -180);
  const Real q = exp(-ldexp(pi(p), 1));
  const Real bound = zeta(Real(3L, p), p) * q / (Real(1L, p) - q);
  EXPECT_GT(v.value.re(), Real(0L, p));
  EXPECT_LT(v.value.re(), bound);
}

TEST(HpGrosswald, DecaysWithImaginaryPart) {
  const Precision p = 192;
  const Real at_i = grosswald_F(3, parse_complex("0,1", p), p).value.re();
  const Real at_2i = grosswald_F(3, parse_complex("0,2", p), p).value.re();
  EXPECT_LT(at_2i, at_i);
}

TEST(HpGrosswald, CutoffCertifiedByDoubling) {
  const Precision p = 256;
  for (const char* z : {"0,0.5", "0,1", "0.25,0.75"}) {
    const GrosswaldValue v = grosswald_F(5, parse_complex(z, p), p);
    const GrosswaldValue twice = grosswald_F(5, parse_complex(z, p), p, 2 * v.terms_used);
    EXPECT_TRUE(close(v.value, twice.value, -240)) << z;
  }
  EXPECT_THROW(grosswald_F(3, parse_complex("1,0", p), p), DomainError);
}

TEST(HpGrosswald, ImaginaryAxisIsALambertSum) {
  // On z = iy, F_s(z) = sum n^{-s} / (e^{2 pi n y} - 1).
  const Precision p = 192;
  const Real y = Real::parse("0.8", p);
  const Real direct = grosswald_F(7, Complex(Real(0L, p), y), p).value.re();
  EXPECT_TRUE(close(direct, lambert_sum(7, ldexp(pi(p), 1) * y, p), -185));
}

TEST(HpGrosswald, IdentitiesUpToSix) {
  for (unsigned s = 1; s <= 6; ++s) {
    const trio::Report r = verify_grosswald_identities(s, 192);
    EXPECT_TRUE(r.passed()) << s << " " << (r.first_failure() ? r.first_failure()->id : "");
    EXPECT_NE(r.find(s % 2 ? "special.unit-i" : "special.i-equals-half-i"), nullptr);
  }
  EXPECT_THROW(verify_grosswald_identities(1, 128), PrecisionError);
}

TEST(HpGrosswald, RamanujanIdentity) {
  const Precision p = 192;
  const Real pi_p = pi(p);
  const std::pair<unsigned, Real> cases[] = {{1, pi_p}, {1, ldexp(pi_p, -1)}, {3, ldexp(pi_p, 1)}};
  for (const auto& [s, alpha] : cases) {
    const trio::Report r = verify_ramanujan_identity(s, alpha, p);
    EXPECT_TRUE(r.passed()) << s;
    EXPECT_EQ(r.find("identity.uncorrected")->status, trio::Status::observational);
  }
}
