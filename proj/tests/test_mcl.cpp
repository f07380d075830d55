#include <gtest/gtest.h>

#include <random>

#include "trio/bernoulli.hpp"
#include "trio/mcl.hpp"
#include "trio/pi_scaled.hpp"

using namespace trio;
using namespace trio::mcl;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

// Independent oracle: Leibniz expansion over all permutations.
Rational leibniz(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Rational term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][perm[i]];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(Mcl, OrderOneAndZero) {
  const std::vector<Rational> h{R("3/4")}, H{R("-2/5")};
  EXPECT_EQ(delta<Rational>(h, 1), R("-3/4"));
  EXPECT_EQ(psi<Rational>(h, H, 1), R("2/5"));
  EXPECT_EQ(delta<Rational>(h, 0), Rational(1));
  EXPECT_EQ(delta_naive(h, 1), R("-3/4"));
}

TEST(Mcl, TwoByTwoByHand) {
  const std::vector<Rational> h{R("2/3"), R("5/7")};
  EXPECT_EQ(delta_naive(h, 2), R("4/9") - R("5/7"));
  EXPECT_EQ(delta<Rational>(h, 2), R("4/9") - R("5/7"));
}

TEST(Mcl, InsufficientLengthRejected) {
  const std::vector<Rational> h{1, 2};
  EXPECT_THROW(delta<Rational>(h, 3), DomainError);
  EXPECT_THROW(delta_naive(std::vector<Rational>(13, 1), 13), DomainError);
}

TEST(Mcl, FiveTermExpansionFromTheText) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_sequence(rng, 5);
    const auto &h1 = h[0], &h2 = h[1], &h3 = h[2], &h4 = h[3], &h5 = h[4];
    const Rational expected = -pow(h1, 5) + Rational(4) * pow(h1, 3) * h2 -
                              (Rational(3) * h1 * h2 * h2 + Rational(3) * h1 * h1 * h3) +
                              (Rational(2) * h2 * h3 + Rational(2) * h1 * h4) - h5;
    EXPECT_EQ(delta<Rational>(h, 5), expected);
  }
}

TEST(Mcl, BareissMatchesLeibniz) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    Matrix m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& x : row) x = (rng() % 3 == 0) ? Rational(0) : random_rational(rng);
    EXPECT_EQ(determinant(m), leibniz(m));
  }
}

TEST(Mcl, VerifyRecurrencesRandomOrderSix) {
  std::mt19937_64 rng(42);
  MCLInput in{random_sequence(rng, 6), random_sequence(rng, 6), random_sequence(rng, 6), 6};
  const Report r = verify_recurrences(in);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.size(), 5u);
}

TEST(MclProperty, RecurrenceEqualsLiteralForAllTypes) {
  std::mt19937_64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned s = 1 + rng() % 10;
    MCLInput in{random_sequence(rng, s), random_sequence(rng, s), random_sequence(rng, s), s};
    for (Type type : {Type::delta, Type::psi, Type::lambda}) {
      ASSERT_EQ(recurrence(type, in, s), naive(type, in, s)) << "trial " << trial;
    }
    ASSERT_EQ(psi<Rational>(in.h, in.H, s), psi_row<Rational>(in.h, in.H, s));
  }
}

TEST(MclProperty, DegenerateCollapses) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned s = 1 + rng() % 10;
    const auto h = random_sequence(rng, s), H = random_sequence(rng, s);
    ASSERT_EQ(psi<Rational>(h, h, s), delta<Rational>(h, s));
    ASSERT_EQ(lambda3<Rational>(h, H, h, s), psi<Rational>(h, H, s));
  }
}

TEST(MclProperty, CharPolyShift) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned s = 1 + rng() % 8;
    MCLInput in{random_sequence(rng, s), random_sequence(rng, s), random_sequence(rng, s), s};
    const Rational mu = random_rational(rng);
    for (Type type : {Type::delta, Type::psi, Type::lambda}) {
      const auto c = char_poly_shift(type, in, mu);
      ASSERT_TRUE(c.equal()) << c.literal.to_string() << " vs " << c.recurrence.to_string();
    }
  }
}

TEST(Mcl, CharPolyExamples) {
  MCLInput in{{R("3/2"), R("1/3"), 2, 5}, {1, 2, 3, 4}, {4, 3, 2, 1}, 4};
  for (Type type : {Type::delta, Type::psi, Type::lambda}) {
    const auto zero = char_poly_shift(type, in, 0);
    EXPECT_EQ(zero.literal, Rational(1) * determinant(build_matrix(type, in, 4)));
    EXPECT_TRUE(char_poly_shift(type, in, R("3/7")).equal());
  }
  MCLInput one{{R("5/2")}, {}, {}, 1};
  const auto c = char_poly_shift(Type::delta, one, R("1/2"));
  EXPECT_EQ(c.literal, Rational(2));
  EXPECT_EQ(c.recurrence, Rational(2));
}

TEST(Mcl, CofactorSymmetryHandValues) {
  const std::vector<Rational> h{R("2/3"), R("5/7"), R("-1/4")};
  // Deleting row 2, column 1 of U_2 leaves [1].
  EXPECT_EQ(type1_minor(h, 2, 2, 1), Rational(1));
  // Deleting row 3, column 3 of U_3 leaves U_2, whose determinant is Delta_2.
  EXPECT_EQ(type1_minor(h, 3, 3, 3), delta<Rational>(h, 2));
  EXPECT_TRUE(cofactor_symmetry(h, 2).passed());
  EXPECT_TRUE(cofactor_symmetry(h, 3).passed());
}

TEST(Mcl, CofactorSymmetryRandom) {
  std::mt19937_64 rng(21);
  for (unsigned n = 2; n <= 10; ++n) {
    const auto h = random_sequence(rng, n);
    const Report r = cofactor_symmetry(h, n);
    EXPECT_TRUE(r.passed()) << n;
    // The unnormalized minor has sign (-1)^{i+j} only for odd n.
    const Case* raw = r.find("raw-minor-form");
    ASSERT_NE(raw, nullptr);
    EXPECT_EQ(raw->lhs == "holds for all i >= j", n % 2 == 1) << n;
  }
}

TEST(Compositions, CountsForFive) {
  const auto c = composition_counts(5);
  EXPECT_EQ(c.monomials, 16);
  const std::vector<mpz_class> expected{1, 4, 6, 4, 1};
  EXPECT_EQ(c.per_parts, expected);
  EXPECT_EQ(c.partitions, 7u);
}

TEST(Compositions, SingleMonomialAtOne) {
  int seen = 0;
  for_each_composition(1, [&](const Composition& c) {
    ++seen;
    EXPECT_EQ(c.t, 1u);
    EXPECT_EQ(c.d, std::vector<unsigned>{1});
  });
  EXPECT_EQ(seen, 1);
  EXPECT_THROW(for_each_composition(25, [](const Composition&) {}), DomainError);
}

TEST(CompositionsProperty, CountsUpToTwenty) {
  for (unsigned s = 1; s <= 20; ++s) {
    const auto c = composition_counts(s);
    ASSERT_EQ(c.monomials, mpz_class(1) << (s - 1));
    for (unsigned t = 1; t <= s; ++t) ASSERT_EQ(c.per_parts[t - 1], binomial(s - 1, t - 1));
  }
}

TEST(CompositionsProperty, ExpansionMatchesRecurrence) {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned s = 1 + rng() % 16;
    const auto h = random_sequence(rng, s);
    ASSERT_EQ(delta_by_compositions<Rational>(h, s), delta<Rational>(h, s)) << trial;
  }
}

TEST(Compositions, WorksOverPiScaled) {
  // h_k = pi^{2k}/(2k+1)! keeps every monomial at grade 2s.
  std::vector<PiScaled> h;
  for (unsigned k = 1; k <= 6; ++k) h.emplace_back(Rational(mpz_class(1), factorial(2 * k + 1)), 2 * k);
  const PiScaled a = delta_by_compositions<PiScaled>(h, 6);
  const PiScaled b = delta<PiScaled>(h, 6);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.pi_pow(), 12);
}

TEST(BernoulliViaMcl, FromV) {
  EXPECT_EQ(bernoulli_via_mcl(2).from_v, R("1/6"));
  EXPECT_EQ(bernoulli_via_mcl(12).from_v, R("-691/2730"));
  for (unsigned s = 1; s <= 40; ++s) ASSERT_EQ(bernoulli_via_mcl(s).from_v, bernoulli::bernoulli(s));
}

TEST(BernoulliViaMcl, SignOfTheUForm) {
  const auto one = bernoulli_via_mcl(1);
  EXPECT_EQ(one.from_u_negative, R("1/6"));
  EXPECT_EQ(one.from_u_double_negative, R("-1/6"));
  for (unsigned s = 1; s <= 30; ++s) {
    const auto b = bernoulli_via_mcl(s);
    ASSERT_TRUE(b.negative_reproduces) << s;
    ASSERT_FALSE(b.double_negative_reproduces) << s;
  }
}

TEST(Mcl, VerifyRandomIsSeededAndPasses) {
  const Report a = verify_random(10, 60, 7);
  const Report b = verify_random(10, 60, 7);
  EXPECT_TRUE(a.passed());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.cases()[i].lhs, b.cases()[i].lhs);
}
