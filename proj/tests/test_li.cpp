#include <gtest/gtest.h>

#include <random>

#include "trio/errors.hpp"
#include "trio/hp/special.hpp"
#include "trio/li.hpp"

using trio::DomainError;
using trio::PrecisionError;
using trio::Rational;
using trio::Report;
using trio::hp::Complex;
using trio::hp::Precision;
using trio::hp::Real;
using namespace trio::li;

namespace {

void expect_passed(const Report& r) {
  const auto* f = r.first_failure();
  EXPECT_TRUE(r.passed()) << r.suite() << ": " << (f ? f->id + " " + f->lhs + " vs " + f->rhs : "");
}

// 1 + gamma/2 - log(4 pi)/2.
Real lambda1_closed_form(Precision p) {
  Real euler(p);
  mpfr_const_euler(euler.get(), MPFR_RNDN);
  return Real(1L, p) + ldexp(euler, -1) - ldexp(log(trio::hp::pi(p) * 4L), -1);
}

const TaylorA& shared_taylor() {
  static const TaylorA t = taylor_a(20, 256);
  return t;
}

}  // namespace

TEST(LiAlgebra, SmallOrdersByHand) {
  const std::vector<Rational> a = {Rational(2, 3), Rational(-5, 7), Rational(1, 4)};
  const std::span<const Rational> v(a);
  EXPECT_EQ(lambda_recurrence(v, 1), a[0]);
  EXPECT_EQ(lambda_composition(v, 1), a[0]);
  EXPECT_EQ(lambda_determinant(v, 1), a[0]);
  const Rational two = Rational(2) * a[1] - a[0] * a[0];
  EXPECT_EQ(lambda_recurrence(v, 2), two);
  EXPECT_EQ(lambda_composition(v, 2), two);
  EXPECT_EQ(lambda_determinant_literal(v, 2), two);
  EXPECT_EQ(lambda_determinant(v, 3), lambda_recurrence(v, 3));
}

TEST(LiAlgebra, RoutesAgreeExactlyOnRandomRationals) {
  const Report r = verify_algebraic(200, 10, 2024);
  expect_passed(r);
  EXPECT_EQ(r.find("composition.uncorrected")->status, trio::Status::observational);
}

TEST(LiAlgebra, CompositionIsLogCoefficient) {
  // log(1 + x z) has z^n coefficient (-1)^{n-1} x^n / n.
  std::vector<Rational> a(8, Rational(0));
  a[0] = Rational(3, 5);
  for (unsigned n = 1; n <= 8; ++n) {
    Rational expected = Rational(1, n);
    for (unsigned k = 0; k < n; ++k) expected *= a[0];
    if (n % 2 == 0) expected = -expected;
    EXPECT_EQ(log_phi_coefficient(std::span<const Rational>(a), n), expected) << n;
  }
}

TEST(LiAlgebra, RejectsShortInput) {
  const std::vector<Rational> a = {Rational(1), Rational(2)};
  EXPECT_THROW(lambda_recurrence(std::span<const Rational>(a), 3), DomainError);
  EXPECT_THROW(lambda_determinant(std::span<const Rational>(a), 0), DomainError);
  EXPECT_THROW(lambda_composition(std::span<const Rational>(std::vector<Rational>(23, Rational(1))), 23),
               DomainError);
}

TEST(LiTaylor, FirstCoefficientMatchesFiniteDifference) {
  const TaylorA& t = shared_taylor();
  const Precision p = 256;
  const Real h = trio::hp::pow2(-static_cast<long>(p) / 3, p);
  const Real fd = (phi(h, p) - phi(-h, p)) / ldexp(h, 1);
  EXPECT_GT(t.a[0], Real(0L, p));
  EXPECT_TRUE(trio::hp::close(t.a[0], fd, -2 * static_cast<long>(p) / 3 + 8));
}

TEST(LiTaylor, LambdaOneMatchesLogDerivativeOfXi) {
  const TaylorA& t = shared_taylor();
  const Precision p = 256;
  const Real closed = lambda1_closed_form(p);
  EXPECT_TRUE(trio::hp::close(t.a[0], closed, -200));

  // Centered differences of log xi at s = 1 with h = 2^{-12-k}, Richardson-extrapolated
  // over eight levels; the error terms are even powers of h.
  const Precision w = 448;
  std::vector<std::vector<Real>> table(8);
  for (int k = 0; k < 8; ++k) {
    const Real h = trio::hp::pow2(-12 - k, w);
    const Real up = log(trio::hp::xi(Complex(Real(1L, w) + h), w).re());
    const Real down = log(trio::hp::xi(Complex(Real(1L, w) - h), w).re());
    table[k].push_back((up - down) / ldexp(h, 1));
    for (int j = 1; j <= k; ++j) {
      const Real f = trio::hp::pow2(2 * j, w);
      table[k].push_back((table[k][j - 1] * f - table[k - 1][j - 1]) / (f - 1L));
    }
  }
  const Real derivative = table.back().back();
  EXPECT_TRUE(trio::hp::close(derivative, lambda1_closed_form(w), -300));
  EXPECT_TRUE(trio::hp::close(t.a[0].with_precision(w), derivative, -200));
}

TEST(LiTaylor, CoefficientsPositiveAndStable) {
  const TaylorA& t = shared_taylor();
  ASSERT_EQ(t.a.size(), 20u);
  for (const auto& x : t.a) EXPECT_GT(x, Real(0L, 256));
  EXPECT_LE(t.stability_log2, -216.0);
  EXPECT_GE(t.contour_points, 128);
}

TEST(LiTaylor, WorkerCountDoesNotChangeResult) {
  const TaylorA one = taylor_a(6, 160, 1);
  const TaylorA many = taylor_a(6, 160, 4);
  for (std::size_t j = 0; j < one.a.size(); ++j) EXPECT_TRUE(one.a[j] == many.a[j]) << j;
}

TEST(LiTaylor, RejectsBadArguments) {
  EXPECT_THROW(taylor_a(0, 256), DomainError);
  EXPECT_THROW(taylor_a(5, 64), PrecisionError);
}

TEST(LiReport, TripleRouteAgreementUpToTwenty) {
  const LiReport r = li_report(20, 256);
  expect_passed(r.report);
  ASSERT_EQ(r.rows.size(), 20u);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.has_composition);
    EXPECT_TRUE(row.spread.is_zero() || row.spread.exponent2() <= -208) << row.n;
    EXPECT_GT(row.lambda, Real(0L, 256)) << row.n;
  }
  EXPECT_TRUE(trio::hp::close(r.rows[0].lambda, lambda1_closed_form(256), -200));
  EXPECT_EQ(r.report.find("trend")->status, trio::Status::observational);
}

TEST(LiBaezDuarte, LeadingTermsAndStability) {
  const auto rows = baez_duarte_c(32, 128);
  const Real pi2 = trio::hp::pi(128) * trio::hp::pi(128);
  EXPECT_TRUE(trio::hp::close(rows[0].c, Real(6L, 128) / pi2, -120));
  const Real c1 = Real(6L, 128) / pi2 - Real(90L, 128) / (pi2 * pi2);
  EXPECT_TRUE(trio::hp::close(rows[1].c, c1, -120));
  const auto doubled = baez_duarte_c(32, 256);
  EXPECT_TRUE(trio::hp::close(rows[32].c, doubled[32].c.with_precision(128), -120));
  expect_passed(baez_duarte_report(64, 128));
  EXPECT_THROW(baez_duarte_c(65, 128), DomainError);
}
