#pragma once

#include <string_view>
#include <vector>

#include "trio/pi_scaled.hpp"
#include "trio/rational.hpp"
#include "trio/report.hpp"
#include "trio/series.hpp"

namespace trio::bernoulli {

enum class Kind { B, Bstar, Bprime };

Kind parse_kind(std::string_view name);
std::string_view to_string(Kind kind);

struct BernoulliTable {
  Kind kind;
  std::vector<Rational> values;  // values[s] for s = 0..max_s
};

/// B_s from the classical recurrence, memoized process-wide.
Rational bernoulli(unsigned s);

/// B_{2s} from the even-only recurrence; kept as a separate table so the
/// two routes check each other. Requires s >= 1.
Rational bernoulli_even_recurrence(unsigned s);

/// B*_s with seeds B*_0 = 1, B*_1 = 1/4 and the recurrence for s >= 2.
Rational bstar(unsigned s);

/// B'_s with seed B'_0 = 1.
Rational bprime(unsigned s);

BernoulliTable table(Kind kind, unsigned max_s);

/// Exact binomial coefficient from the shared Pascal-row cache.
mpz_class binomial_cached(unsigned n, unsigned k);

/// Coefficients of T(x) = sum 2^{2s} B*_{2s-1} x^{2s-2} / (2s-1)! up to x^order.
RatSeries trio_t_series(std::size_t order);

/// Coefficients of 1 + sum 2^{2s} B'_{2s} x^{2s} / (2s)! up to x^order.
RatSeries trio_denominator_series(std::size_t order);

/// Checks the three clauses of the Bernoulli trio for all s <= max_s.
/// Case ids: "i.even", "i.odd", "ii", "iii.product", "iii.inverse". A failing
/// case names the first counterexample index in its lhs.
Report verify_trio(unsigned max_s);

/// theta(2s) rebuilt from B*_{2s-1}.
PiScaled theta_from_bstar(unsigned s);

}  // namespace trio::bernoulli
