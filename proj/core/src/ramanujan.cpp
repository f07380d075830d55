#include "trio/ramanujan.hpp"

#include <string>

#include "trio/bernoulli.hpp"

namespace trio::ramanujan {

namespace {

Rational inv_factorial(unsigned n) { return Rational(mpz_class(1), factorial(n)); }

std::string gauss_string(const GaussRational& g) { return g.re.to_string() + "," + g.im.to_string(); }

void compare(Report& report, std::string id, std::string ref, const Rational& lhs, const Rational& rhs) {
  const bool ok = lhs == rhs;
  report.check(std::move(id), std::move(ref), ok, lhs.to_string(), rhs.to_string(),
               ok ? "0" : (lhs - rhs).to_string());
}

void compare(Report& report, std::string id, std::string ref, const RatPoly& lhs, const RatPoly& rhs) {
  const bool ok = lhs == rhs;
  report.check(std::move(id), std::move(ref), ok, lhs.to_string(), rhs.to_string(),
               ok ? "0" : (lhs - rhs).to_string());
}

}  // namespace

RamanujanPoly q_poly(unsigned r) {
  if (r == 0) throw DomainError("q_poly: r must be >= 1");
  std::vector<Rational> c(r + 2);
  for (unsigned k = 0; 2 * k <= r + 1; ++k) {
    const unsigned a = r + 1 - 2 * k;
    c[2 * k] = bernoulli::bstar(a) * bernoulli::bstar(2 * k) * inv_factorial(a) * inv_factorial(2 * k);
  }
  return {r, RatPoly(std::move(c))};
}

RamanujanPoly r_odd(unsigned s) {
  if (s == 0) throw DomainError("r_odd: s must be >= 1");
  std::vector<Rational> c(2 * s + 3);
  for (unsigned k = 0; k <= s + 1; ++k) {
    const unsigned a = 2 * s + 2 - 2 * k;
    c[2 * k] = bernoulli::bernoulli(2 * k) * bernoulli::bernoulli(a) * inv_factorial(2 * k) * inv_factorial(a);
  }
  return {2 * s + 1, RatPoly(std::move(c))};
}

RamanujanPoly r_even(unsigned s) {
  if (s == 0) throw DomainError("r_even: s must be >= 1");
  return q_poly(2 * s);
}

Report verify_reciprocal(unsigned s) {
  Report report("ramanujan.reciprocal.s" + std::to_string(s));
  const long n = 2 * static_cast<long>(s) + 2;
  const RatPoly odd = r_odd(s).poly;
  const RatPoly even = r_even(s).poly;
  const Rational half(1, 2);

  compare(report, "q-odd", "Q_{2s+1} = R_{2s+1}", q_poly(2 * s + 1).poly, odd);
  compare(report, "palindrome", "z^{2s+2} R_{2s+1}(1/z) = R_{2s+1}(z)", odd.reciprocal(n), odd);

  // 4 z^{2s+2} (R(1/z) - R(1/(2z))) = 4 (recip(R) - recip(R(z/2))).
  const RatPoly first = Rational(4) * (odd.reciprocal(n) - odd.scaled_argument(half).reciprocal(n));
  compare(report, "even-link.reciprocal", "Q_{2s} = 4 z^{2s+2}(R_{2s+1}(1/z) - R_{2s+1}(1/(2z)))", even, first);
  const RatPoly second = Rational(4) * (odd - Rational::pow2(-n) * odd.scaled_argument(Rational(2)));
  compare(report, "even-link.scaled", "Q_{2s} = 4(R_{2s+1}(z) - 2^{-2s-2} R_{2s+1}(2z))", even, second);

  const RatPoly p = even - even.scaled_argument(half);
  const RatPoly rhs = even.reciprocal(n) - even.scaled_argument(half).reciprocal(n);
  compare(report, "two-term", "R_{2s}(z) - R_{2s}(z/2) = z^{2s+2}(R_{2s}(1/z) - R_{2s}(1/(2z)))", p, rhs);
  return report;
}

Report special_values(unsigned s) {
  Report report("ramanujan.special.s" + std::to_string(s));
  const RatPoly odd = r_odd(s).poly;
  const RatPoly even = r_even(s).poly;
  const Rational one(1), two(2), half(1, 2);

  const Rational target = -Rational(2 * s + 1) * bernoulli::bernoulli(2 * s + 2) * inv_factorial(2 * s + 2);
  compare(report, "odd.at-1", "R_{2s+1}(1) = -(2s+1)B_{2s+2}/(2s+2)!", odd.eval(one), target);
  compare(report, "odd.at-2", "R_{2s+1}(2) = R_{2s+1}(1)", odd.eval(two), target);
  compare(report, "even.at-1", "R_{2s}(1) = -B*_{2s+1}/(2s)!", even.eval(one),
          -bernoulli::bstar(2 * s + 1) * inv_factorial(2 * s));
  compare(report, "odd.at-half", "R_{2s+1}(1/2) = R_{2s+1}(1)/2^{2s+2}", odd.eval(half),
          target * Rational::pow2(-2 * static_cast<long>(s) - 2));
  compare(report, "even.at-half", "R_{2s}(1/2) = 0", even.eval(half), Rational(0));

  Rational bprime_sum;
  for (unsigned k = 0; k <= s; ++k) {
    const unsigned a = 2 * s + 1 - 2 * k;
    bprime_sum += bernoulli::bstar(a) * bernoulli::bprime(2 * k) * inv_factorial(a) * inv_factorial(2 * k);
  }
  compare(report, "even.at-half.bprime", "sum B*_{2s+1-2k} B'_{2k}/(...) = 0", bprime_sum, Rational(0));

  if (s % 2 == 0) {
    const GaussRational i{Rational(0), Rational(1)};
    const GaussRational half_i{Rational(0), half};
    const GaussRational at_i = poly_eval_gauss(odd, i);
    report.check("odd.at-i", "R_{2s+1}(i) = 0 for even s", at_i.is_zero(), gauss_string(at_i), "0,0");
    const GaussRational e_i = poly_eval_gauss(even, i);
    const GaussRational e_half_i = poly_eval_gauss(even, half_i);
    report.check("even.at-i", "R_{2s}(i) = R_{2s}(i/2) for even s", e_i == e_half_i, gauss_string(e_i),
                 gauss_string(e_half_i));
  }
  return report;
}

Rational weighted_pair_sum(unsigned s) {
  Rational acc;
  for (unsigned k = 0; k <= s + 1; ++k) {
    const unsigned a = 2 * s + 2 - 2 * k;
    acc += (Rational::pow2(2 * static_cast<long>(k)) - Rational(1)) * bernoulli::bernoulli(a) *
           bernoulli::bernoulli(2 * k) * inv_factorial(a) * inv_factorial(2 * k);
  }
  return acc;
}

Report verify_shape(unsigned s) {
  Report report("ramanujan.shape.s" + std::to_string(s));
  const RatPoly odd = r_odd(s).poly;
  const RatPoly even = r_even(s).poly;
  const long deg_odd = 2 * static_cast<long>(s) + 2;
  const long deg_even = 2 * static_cast<long>(s);
  report.check("odd.degree", "deg R_{2s+1} = 2s+2", odd.degree() == deg_odd, std::to_string(odd.degree()),
               std::to_string(deg_odd));
  report.check("even.degree", "deg R_{2s} = 2s", even.degree() == deg_even, std::to_string(even.degree()),
               std::to_string(deg_even));
  report.check("even-powers", "only even powers of z", odd.is_even() && even.is_even(),
               odd.is_even() ? "odd index even" : "odd index has odd powers",
               even.is_even() ? "even index even" : "even index has odd powers");
  return report;
}

Report verify_all(unsigned max_s) {
  Report report("ramanujan");
  for (unsigned s = 1; s <= max_s; ++s) {
    const std::string prefix = "s" + std::to_string(s);
    report.absorb(verify_shape(s), prefix);
    report.absorb(verify_reciprocal(s), prefix);
    report.absorb(special_values(s), prefix);
    const Rational pair = weighted_pair_sum(s);
    report.check(prefix + ".pair-sum", "R_{2s+1}(2) - R_{2s+1}(1) as a Bernoulli sum", pair.is_zero(), pair.to_string(),
                 "0");
  }
  return report;
}

}  // namespace trio::ramanujan
