#include "trio/bernoulli.hpp"

#include <functional>
#include <memory>
#include <mutex>

#include "trio/errors.hpp"

namespace trio::bernoulli {

namespace {

using Row = std::vector<mpz_class>;

class PascalCache {
 public:
  std::shared_ptr<const Row> row(unsigned n) {
    std::lock_guard lock(mutex_);
    if (rows_.empty()) rows_.push_back(std::make_shared<const Row>(Row{1}));
    while (rows_.size() <= n) {
      const Row& prev = *rows_.back();
      Row next(prev.size() + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t k = 1; k < prev.size(); ++k) next[k] = prev[k - 1] + prev[k];
      rows_.push_back(std::make_shared<const Row>(std::move(next)));
    }
    return rows_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<std::shared_ptr<const Row>> rows_;
};

PascalCache& pascal() {
  static PascalCache cache;
  return cache;
}

// Table filled bottom-up; `next(values)` returns the entry at index values.size().
class Memo {
 public:
  using Step = std::function<Rational(const std::vector<Rational>&)>;

  Memo(std::vector<Rational> seeds, Step next) : values_(std::move(seeds)), next_(std::move(next)) {}

  Rational at(unsigned s) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= s) values_.push_back(next_(values_));
    return values_[s];
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
  Step next_;
};

Memo& b_table() {
  static Memo memo({Rational(1)}, [](const std::vector<Rational>& b) {
    const unsigned s = static_cast<unsigned>(b.size());
    const auto row = pascal().row(s + 1);
    Rational acc;
    for (unsigned k = 0; k < s; ++k) {
      if (!b[k].is_zero()) acc += Rational((*row)[k]) * b[k];
    }
    return -acc / Rational(s + 1);
  });
  return memo;
}

// even[j] holds B_{2j}, produced by the even-only recurrence.
Memo& even_table() {
  static Memo memo({Rational(1)}, [](const std::vector<Rational>& even) {
    const unsigned s = static_cast<unsigned>(even.size());
    const auto row = pascal().row(2 * s + 1);
    Rational acc;
    for (unsigned k = 1; k < s; ++k) {
      acc += Rational((*row)[2 * k]) * Rational::pow2(2 * static_cast<long>(k) - 1) * even[k];
    }
    const Rational rhs = (Rational(s) - acc) / Rational(2 * s + 1);
    return rhs * Rational::pow2(1 - 2 * static_cast<long>(s));
  });
  return memo;
}

// sum_{k<s} C(s+1,k) w_k B_k with w_k = 2^k (B*) or 1 (B').
Rational weighted_sum(unsigned s, bool power_weight) {
  const auto row = pascal().row(s + 1);
  Rational acc;
  for (unsigned k = 0; k < s; ++k) {
    const Rational bk = bernoulli(k);
    if (bk.is_zero()) continue;
    Rational term = Rational((*row)[k]) * bk;
    if (power_weight) term *= Rational::pow2(k);
    acc += term;
  }
  return acc;
}

Memo& bstar_table() {
  static Memo memo({Rational(1), Rational(1, 4)}, [](const std::vector<Rational>& v) {
    const unsigned s = static_cast<unsigned>(v.size());
    return -weighted_sum(s, true) * Rational::pow2(-static_cast<long>(s)) / Rational(s + 1);
  });
  return memo;
}

Memo& bprime_table() {
  static Memo memo({Rational(1)}, [](const std::vector<Rational>& v) {
    const unsigned s = static_cast<unsigned>(v.size());
    return -weighted_sum(s, false) * Rational::pow2(-static_cast<long>(s)) / Rational(s + 1);
  });
  return memo;
}

}  // namespace

Kind parse_kind(std::string_view name) {
  if (name == "B") return Kind::B;
  if (name == "Bstar") return Kind::Bstar;
  if (name == "Bprime") return Kind::Bprime;
  throw DomainError("unknown Bernoulli kind: " + std::string(name));
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::B: return "B";
    case Kind::Bstar: return "Bstar";
    case Kind::Bprime: return "Bprime";
  }
  return "B";
}

Rational bernoulli(unsigned s) { return b_table().at(s); }

Rational bernoulli_even_recurrence(unsigned s) {
  if (s == 0) throw DomainError("bernoulli_even_recurrence: s must be >= 1");
  return even_table().at(s);
}

Rational bstar(unsigned s) { return bstar_table().at(s); }

Rational bprime(unsigned s) { return bprime_table().at(s); }

BernoulliTable table(Kind kind, unsigned max_s) {
  BernoulliTable t{kind, {}};
  t.values.reserve(max_s + 1);
  for (unsigned s = 0; s <= max_s; ++s) {
    switch (kind) {
      case Kind::B: t.values.push_back(bernoulli(s)); break;
      case Kind::Bstar: t.values.push_back(bstar(s)); break;
      case Kind::Bprime: t.values.push_back(bprime(s)); break;
    }
  }
  return t;
}

mpz_class binomial_cached(unsigned n, unsigned k) {
  if (k > n) return 0;
  return (*pascal().row(n))[k];
}

RatSeries trio_t_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t e = 0; e <= order; e += 2) {
    const unsigned s = static_cast<unsigned>(e / 2 + 1);
    c[e] = Rational::pow2(2 * s) * bstar(2 * s - 1) / Rational(factorial(2 * s - 1));
  }
  return RatSeries(std::move(c));
}

RatSeries trio_denominator_series(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (std::size_t e = 2; e <= order; e += 2) {
    const unsigned s = static_cast<unsigned>(e / 2);
    c[e] = Rational::pow2(2 * s) * bprime(2 * s) / Rational(factorial(2 * s));
  }
  return RatSeries(std::move(c));
}

namespace {

// Runs `ok(s)` for s = first..last and records one case with the first
// counterexample, if any.
void clause(Report& report, const std::string& id, const std::string& ref, unsigned first,
            unsigned last, const std::function<bool(unsigned, std::string&, std::string&)>& ok) {
  for (unsigned s = first; s <= last; ++s) {
    std::string lhs, rhs;
    if (!ok(s, lhs, rhs)) {
      report.check(id, ref, false, "s=" + std::to_string(s) + ": " + lhs, rhs, "nonzero");
      return;
    }
  }
  report.check(id, ref, true, "s=" + std::to_string(first) + ".." + std::to_string(last),
               "all equal", "0");
}

}  // namespace

Report verify_trio(unsigned max_s) {
  if (max_s < 1) throw DomainError("verify_trio: max_s must be >= 1");
  Report report("bernoulli.trio");

  clause(report, "i.even", "B*_{2s} = B_{2s}", 1, max_s, [](unsigned s, auto& l, auto& r) {
    const Rational a = bstar(2 * s), b = bernoulli(2 * s);
    l = a.to_string();
    r = b.to_string();
    return a == b;
  });
  clause(report, "i.odd", "B*_{2s-1} = (1 - 2^{-2s}) 2 B_{2s} / s", 1, max_s,
         [](unsigned s, auto& l, auto& r) {
           const Rational a = bstar(2 * s - 1);
           const Rational b = (Rational(1) - Rational::pow2(-2 * static_cast<long>(s))) *
                              Rational(2) * bernoulli(2 * s) / Rational(s);
           l = a.to_string();
           r = b.to_string();
           return a == b;
         });
  clause(report, "ii", "B'_s = B_s / 2^s", 1, max_s, [](unsigned s, auto& l, auto& r) {
    const Rational a = bprime(s), b = bernoulli(s) * Rational::pow2(-static_cast<long>(s));
    l = a.to_string();
    r = b.to_string();
    return a == b;
  });

  const std::size_t order = 2 * static_cast<std::size_t>(max_s);
  const RatSeries t = trio_t_series(order);
  const RatSeries d = trio_denominator_series(order);
  const RatSeries product = series_mul(t, d);
  const RatSeries unit = RatSeries::unit(order);
  {
    std::size_t bad = order + 1;
    for (std::size_t k = 0; k <= order && bad > order; ++k) {
      if (product[k] != unit[k]) bad = k;
    }
    report.check("iii.product", "T(x) (1 + sum 2^{2s} B'_{2s} x^{2s}/(2s)!) = 1", bad > order,
                 bad > order ? "order " + std::to_string(order)
                             : "x^" + std::to_string(bad) + ": " + product[bad].to_string(),
                 bad > order ? "unit series" : unit[bad].to_string(), bad > order ? "0" : "nonzero");
  }
  {
    const RatSeries inv = series_inverse(d);
    std::size_t bad = order + 1;
    for (std::size_t k = 0; k <= order && bad > order; ++k) {
      if (inv[k] != t[k]) bad = k;
    }
    report.check("iii.inverse", "T(x) = (1 + sum 2^{2s} B'_{2s} x^{2s}/(2s)!)^{-1}", bad > order,
                 bad > order ? "order " + std::to_string(order)
                             : "x^" + std::to_string(bad) + ": " + inv[bad].to_string(),
                 bad > order ? "T(x)" : t[bad].to_string(), bad > order ? "0" : "nonzero");
  }
  return report;
}

PiScaled theta_from_bstar(unsigned s) {
  if (s == 0) throw DomainError("theta_from_bstar: s must be >= 1");
  Rational c = Rational::pow2(2 * static_cast<long>(s) - 3) * bstar(2 * s - 1) /
               Rational(factorial(2 * s - 1));
  if (s % 2 == 0) c = -c;
  return PiScaled(c, 2 * static_cast<int>(s));
}

}  // namespace trio::bernoulli
