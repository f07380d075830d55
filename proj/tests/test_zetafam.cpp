#include <gtest/gtest.h>

#include "trio/bernoulli.hpp"
#include "trio/errors.hpp"
#include "trio/zetafam.hpp"

using trio::PiScaled;
using trio::Rational;
using trio::Report;
using trio::Status;
using namespace trio::zeta;

namespace {

void expect_passed(const Report& r) {
  const auto* f = r.first_failure();
  EXPECT_TRUE(r.passed()) << r.suite() << ": " << (f ? f->id + " " + f->lhs + " vs " + f->rhs : "");
}

// Independent oracle: Euler's product form of zeta(2s) via B_{2s} from the
// Akiyama-Tanigawa algorithm.
Rational at_bernoulli(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
  }
  return a[0];  // B_n with B_1 = +1/2; only even n are used here
}

}  // namespace

TEST(ZetaEven, ClosedFormExamples) {
  EXPECT_EQ(zeta_even(1), PiScaled(Rational(1, 6), 2));
  EXPECT_EQ(zeta_even(2), PiScaled(Rational(1, 90), 4));
  EXPECT_EQ(zeta_even(7), PiScaled(Rational(2, 18243225), 14));
  EXPECT_EQ(theta_even(2), PiScaled(Rational(1, 96), 4));
  EXPECT_EQ(eta_even(1), PiScaled(Rational(1, 12), 2));
  EXPECT_EQ(phi_even(1), PiScaled(Rational(1, 24), 2));
}

TEST(ZetaEven, MatchesAkiyamaTanigawaOracle) {
  for (unsigned s = 1; s <= 40; ++s) {
    Rational c = at_bernoulli(2 * s) * Rational::pow2(2 * static_cast<long>(s) - 1);
    c = c / Rational(trio::factorial(2 * s));
    if (s % 2 == 0) c = -c;
    EXPECT_EQ(zeta_even(s), PiScaled(c, 2 * static_cast<int>(s))) << s;
  }
}

TEST(ZetaFamily, RecurrenceExamples) {
  EXPECT_EQ(recurrence_values(Recurrence::zeta_linear, 2)[1], PiScaled(Rational(1, 90), 4));
  EXPECT_EQ(recurrence_values(Recurrence::theta_self, 2)[1], PiScaled(Rational(1, 96), 4));
  EXPECT_EQ(recurrence_values(Recurrence::eta_self, 1)[0], PiScaled(Rational(1, 12), 2));
}

TEST(ZetaFamily, AllRecurrencesReproduceClosedFormsUpTo100) {
  const Report r = verify_family_recurrences(100);
  EXPECT_EQ(r.size(), 6u);
  expect_passed(r);
}

TEST(ZetaFamily, RelationsHoldUpTo200) { expect_passed(verify_family_relations(200)); }

TEST(ZetaFamily, ParseAndPrintNames) {
  for (Family f : {Family::zeta, Family::eta, Family::theta, Family::phi}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_family("xi"), trio::DomainError);
}

TEST(Quadratic, FirstCaseByHand) {
  // theta(4) = 2 phi(2) theta(2) = 2 (pi^2/24)(pi^2/8).
  EXPECT_EQ(phi_even(1) * theta_even(1) * Rational(2), theta_even(2));
}

TEST(Quadratic, IdentitiesHoldUpTo60) {
  for (unsigned s = 1; s <= 60; ++s) {
    const Report r = quadratic_identities(s);
    expect_passed(r);
    EXPECT_EQ(r.find("zeta.compositions") != nullptr, s <= 24);
  }
}

TEST(Quadratic, DisplayedZetaDeterminantIsOffByTheOddFactor) {
  for (unsigned s = 1; s <= 8; ++s) {
    const auto* c = quadratic_identities(s).find("zeta.determinant.uncorrected");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::observational);
    const long big = (1L << (2 * s + 2)) - 1;
    EXPECT_EQ(c->residual, "ratio " + std::to_string(big) + "/1") << s;
  }
}

TEST(Quadratic, TermCounts) {
  for (unsigned s = 1; s <= 16; ++s) expect_passed(composition_term_counts(s));
  const Report r = composition_term_counts(7);
  EXPECT_EQ(r.find("weighted-total")->lhs, "729");
  EXPECT_EQ(r.find("plain-total")->lhs, "64");
}

TEST(FourWay, SmallCasesByHand) {
  const Report zeta1 = fourway(1, Scaled::zeta);
  EXPECT_EQ(zeta1.find("determinant")->lhs, "1/6*pi^2");
  const Report eta1 = fourway(1, Scaled::two_eta);
  EXPECT_EQ(eta1.find("determinant")->lhs, "1/6*pi^2");
}

TEST(FourWay, AllMembersAgreeUpTo24) {
  for (Scaled f : {Scaled::two_eta, Scaled::zeta, Scaled::four_phi, Scaled::four_theta}) {
    for (unsigned s = 1; s <= 24; ++s) expect_passed(fourway(s, f));
  }
  EXPECT_THROW(fourway(25, Scaled::zeta), trio::DomainError);
}

TEST(FourWay, FourThetaAtSevenUsesTheAlternatingExpansion) {
  const Report r = fourway(7, Scaled::four_theta);
  expect_passed(r);
  EXPECT_EQ(scaled_value(Scaled::four_theta, 7), theta_even(7) * Rational(4));
}

TEST(Classic, DisplayedChainCannotHold) {
  for (unsigned s = 1; s <= 30; ++s) {
    const ClassicResidual c = classic_recurrence_residual(s);
    EXPECT_TRUE(!c.vs_zeta.is_zero() || !c.vs_zero.is_zero()) << s;
    EXPECT_TRUE(c.sum_with_k0.is_zero()) << s;
  }
  const ClassicResidual one = classic_recurrence_residual(1);
  EXPECT_EQ(one.sum, PiScaled(Rational(-1, 12), 2));
  EXPECT_EQ(one.vs_zeta, PiScaled(Rational(1, 4), 2));
}

TEST(Zeta14, TripleCheck) {
  const Report r = zeta14_check();
  expect_passed(r);
  EXPECT_EQ(r.find("pair-weights")->status, Status::pass);
  EXPECT_EQ(r.find("alternating-expansion")->status, Status::pass);
  EXPECT_EQ(r.find("quadratic.uncorrected")->status, Status::observational);
  EXPECT_EQ(r.find("quadratic.uncorrected")->residual, "ratio 16383/2");
  EXPECT_EQ(r.find("positive-expansion.uncorrected")->status, Status::observational);
}
