#include <gtest/gtest.h>

#include <thread>

#include "trio/bernoulli.hpp"
#include "trio/errors.hpp"

using trio::DomainError;
using trio::PiScaled;
using trio::Rational;
using trio::Report;
using trio::bernoulli::bernoulli;
using trio::bernoulli::bernoulli_even_recurrence;
using trio::bernoulli::bprime;
using trio::bernoulli::bstar;
using trio::bernoulli::Kind;
using trio::bernoulli::table;
using trio::bernoulli::theta_from_bstar;
using trio::bernoulli::verify_trio;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

// Independent oracle: B_n from the Akiyama-Tanigawa transform.
std::vector<Rational> akiyama_tanigawa(unsigned n_max) {
  std::vector<Rational> out, a(n_max + 1);
  for (unsigned m = 0; m <= n_max; ++m) {
    a[m] = Rational(mpz_class(1), mpz_class(m + 1));
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  // The transform yields B_1 = +1/2.
  if (n_max >= 1) out[1] = -out[1];
  return out;
}

}  // namespace

TEST(Bernoulli, KnownTable) {
  const char* b[] = {"1",     "-1/2", "1/6", "0",     "-1/30", "0",        "1/42",
                     "0",     "-1/30", "0",  "5/66",  "0",     "-691/2730"};
  const char* bs[] = {"1",       "1/4",   "1/6",      "-1/32", "-1/30",
                      "1/64",    "1/42",  "-17/1024", "-1/30", "31/1024",
                      "5/66",    "-691/8192", "-691/2730"};
  for (unsigned s = 0; s <= 12; ++s) {
    EXPECT_EQ(bernoulli(s), R(b[s])) << s;
    EXPECT_EQ(bstar(s), R(bs[s])) << s;
  }
}

TEST(Bernoulli, MatchesAkiyamaTanigawaOracle) {
  const auto oracle = akiyama_tanigawa(120);
  for (unsigned s = 0; s <= 120; ++s) EXPECT_EQ(bernoulli(s), oracle[s]) << s;
}

TEST(Bernoulli, EvenRecurrenceExamples) {
  EXPECT_EQ(bernoulli_even_recurrence(1), R("1/6"));
  EXPECT_EQ(bernoulli_even_recurrence(2), R("-1/30"));
  EXPECT_EQ(bernoulli_even_recurrence(6), R("-691/2730"));
  EXPECT_THROW(bernoulli_even_recurrence(0), DomainError);
}

TEST(Bernoulli, BprimeExamples) {
  EXPECT_EQ(bprime(0), Rational(1));
  EXPECT_EQ(bprime(4), R("-1/480"));
  EXPECT_EQ(bprime(3), Rational(0));
}

TEST(BernoulliProperty, EvenRecurrenceAgreesUpTo200) {
  for (unsigned s = 1; s <= 200; ++s) {
    ASSERT_EQ(bernoulli_even_recurrence(s), bernoulli(2 * s)) << s;
  }
}

TEST(BernoulliProperty, BstarEvenEqualsB) {
  for (unsigned s = 1; s <= 200; ++s) ASSERT_EQ(bstar(2 * s), bernoulli(2 * s)) << s;
}

TEST(BernoulliProperty, BprimeScalesB) {
  for (unsigned s = 0; s <= 400; ++s) {
    ASSERT_EQ(bprime(s) * Rational::pow2(s), bernoulli(s)) << s;
  }
}

TEST(BernoulliProperty, EvenSignPattern) {
  for (unsigned s = 1; s <= 200; ++s) {
    const int expected = s % 2 == 1 ? 1 : -1;
    ASSERT_EQ(bernoulli(2 * s).sign(), expected) << s;
    if (s >= 2) ASSERT_TRUE(bernoulli(2 * s - 1).is_zero());
  }
}

TEST(Trio, SmallExamples) {
  const Report r2 = verify_trio(2);
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(bstar(3), R("-1/32"));
  EXPECT_EQ((Rational(1) - R("1/16")) * Rational(2) * bernoulli(4) / Rational(2), R("-1/32"));
  EXPECT_EQ(bprime(1), R("-1/4"));
  EXPECT_TRUE(verify_trio(1).passed());
}

TEST(Trio, FiftyPasses) {
  const Report r = verify_trio(50);
  ASSERT_TRUE(r.passed());
  for (const char* id : {"i.even", "i.odd", "ii", "iii.product", "iii.inverse"}) {
    ASSERT_NE(r.find(id), nullptr) << id;
  }
}

TEST(Trio, ThetaFromBstar) {
  EXPECT_EQ(theta_from_bstar(1), PiScaled(R("1/8"), 2));
  EXPECT_EQ(theta_from_bstar(2), PiScaled(R("1/96"), 4));
  EXPECT_EQ(theta_from_bstar(3), PiScaled(R("1/960"), 6));
}

TEST(Bernoulli, TablesExtendMonotonically) {
  const auto t = table(Kind::Bstar, 30);
  ASSERT_EQ(t.values.size(), 31u);
  EXPECT_EQ(t.values[1], R("1/4"));
  EXPECT_EQ(table(Kind::Bprime, 5).values[2], R("1/24"));
}

TEST(Bernoulli, ConcurrentReadersSeeIdenticalValues) {
  std::vector<std::vector<Rational>> seen(4);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (unsigned s = 0; s <= 260; s += 1 + w) seen[w].push_back(bstar(s) + bernoulli(s));
    });
  }
  for (auto& t : workers) t.join();
  for (unsigned w = 0; w < 4; ++w) {
    unsigned i = 0;
    for (unsigned s = 0; s <= 260; s += 1 + w) EXPECT_EQ(seen[w][i++], bstar(s) + bernoulli(s));
  }
}
