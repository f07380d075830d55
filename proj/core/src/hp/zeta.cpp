#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "trio/bernoulli.hpp"
#include "trio/errors.hpp"
#include "trio/hp/special.hpp"

namespace trio::hp {

namespace {

// Euler-Maclaurin split: zeta(s) = finite + pole / (s - 1) with pole = N^{1-s}.
template <class T>
struct EmParts {
  T finite;
  T pole;
};

Real real_part(const Real& x) { return x; }
Real real_part(const Complex& z) { return z.re(); }
Real magnitude(const Real& x) { return abs(x); }
Real magnitude(const Complex& z) { return abs(z); }

// n^{-s} given log n.
Real neg_pow(const Real& s, const Real& log_n) { return exp(-(s * log_n)); }
Complex neg_pow(const Complex& s, const Real& log_n) { return exp(-(s * log_n)); }

template <class T>
EmParts<T> euler_maclaurin(const T& s_in, Precision p, double scale, ZetaPlan* plan) {
  if (p < 64) throw PrecisionError("zeta: precision below 64 bits", 64);
  const double abs_s = magnitude(s_in).to_double();
  const double re_s = real_part(s_in).to_double();
  if (!std::isfinite(abs_s) || abs_s > 1e6) {
    throw PrecisionError("zeta: |s| too large for Euler-Maclaurin at desk scale", p);
  }
  long n = std::max<long>(10, static_cast<long>(std::ceil(
                                  std::max(0.7 * static_cast<double>(p), 3.0 * abs_s) * scale)));
  for (int attempt = 0; attempt < 6; ++attempt, n *= 2) {
    const double log2n = std::log2(static_cast<double>(n));
    const Precision guard = 32 + static_cast<Precision>(std::ceil(log2n)) +
                            static_cast<Precision>(std::max(0.0, (1.0 - re_s) * log2n));
    const Precision w = p + guard;
    const T s = s_in.with_precision(w);
    const Real tol = pow2(-static_cast<long>(p) - 10, w);

    T finite = zero_like(s);
    for (long k = 1; k < n; ++k) finite += neg_pow(s, log(Real(k, w)));
    const Real log_n = log(Real(n, w));
    const T n_pow = neg_pow(s, log_n);  // N^{-s}
    finite += ldexp(real_part(one_like(s)), -1) * n_pow;
    const T pole = n_pow * Real(n, w);

    // Corrections B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
    T poch = s;
    T npow = n_pow / Real(n, w);
    const Real inv_n2 = Real(1L, w) / Real(n * n, w);
    Real prev_mag(w);
    bool converged = false;
    long k = 1;
    for (; k <= 4 * static_cast<long>(p); ++k) {
      const Rational coeff = bernoulli::bernoulli(2 * static_cast<unsigned>(k)) /
                             Rational(factorial(2 * static_cast<unsigned long>(k)));
      T term = poch * npow;
      term *= coeff;
      finite += term;
      const Real mag = magnitude(term);
      const Real bound = tol * std::max(Real(1L, w), magnitude(finite));
      if (mag <= bound) {
        converged = true;
        break;
      }
      if (k > 2 && mag > prev_mag) break;  // asymptotic series started to grow
      prev_mag = mag;
      poch *= (s + (2 * k - 1)) * (s + 2 * k);
      npow *= inv_n2;
    }
    if (converged) {
      if (plan) *plan = {n, k, w};
      return {finite, pole};
    }
  }
  throw PrecisionError("zeta: Euler-Maclaurin did not reach the target precision", p);
}

bool is_one(const Complex& s) { return s.im().is_zero() && s.re() == 1L; }

}  // namespace

Complex zeta(const Complex& s, Precision p, double scale, ZetaPlan* plan) {
  if (is_one(s)) throw DomainError("zeta: pole at s = 1");
  if (s.im().is_zero()) return Complex(zeta(s.re(), p, scale, plan));
  auto parts = euler_maclaurin<Complex>(s, p, scale, plan);
  const Complex sw = s.with_precision(parts.finite.precision());
  return (parts.finite + parts.pole / (sw - one_like(sw))).with_precision(p);
}

Real zeta(const Real& s, Precision p, double scale, ZetaPlan* plan) {
  if (s == 1L) throw DomainError("zeta: pole at s = 1");
  auto parts = euler_maclaurin<Real>(s, p, scale, plan);
  const Real sw = s.with_precision(parts.finite.precision());
  return (parts.finite + parts.pole / (sw - 1L)).with_precision(p);
}

Complex zeta_pole_free(const Complex& s, Precision p) {
  auto parts = euler_maclaurin<Complex>(s, p, 1.0, nullptr);
  const Complex sw = s.with_precision(parts.finite.precision());
  return ((sw - one_like(sw)) * parts.finite + parts.pole).with_precision(p);
}

namespace {

struct SpougeTable {
  long a;
  Precision w;
  std::vector<Real> c;  // c[0] = sqrt(2 pi), c[k] for k = 1..a-1
};

std::shared_ptr<const SpougeTable> spouge_table(Precision p) {
  static std::mutex mutex;
  static std::map<Precision, std::shared_ptr<const SpougeTable>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(p); it != cache.end()) return it->second;

  // Relative error <= a^{-1/2} (2 pi)^{-(a + 1/2)}; log2(2 pi) ~ 2.651.
  const long a = static_cast<long>(std::ceil((static_cast<double>(p) + 16.0) / 2.651)) + 1;
  const Precision w = p + 32 + 2 * a;
  auto table = std::make_shared<SpougeTable>();
  table->a = a;
  table->w = w;
  table->c.push_back(sqrt(ldexp(pi(w), 1)));
  Real fact(1L, w);  // (k-1)!
  for (long k = 1; k < a; ++k) {
    if (k > 1) fact *= (k - 1);
    const Real base(a - k, w);
    Real ck = pow(base, Real(Rational(mpz_class(2 * k - 1), mpz_class(2)), w)) * exp(base) / fact;
    if (k % 2 == 0) ck = -ck;
    table->c.push_back(std::move(ck));
  }
  cache.emplace(p, table);
  return table;
}

// Gamma(w + 1) for Re(w) >= 1/2.
Complex spouge(const Complex& w_in, const SpougeTable& t) {
  const Complex w = w_in.with_precision(t.w);
  Complex sum(t.c[0], Real(0L, t.w));
  for (long k = 1; k < t.a; ++k) {
    const Complex denom = w + Complex(k, 0, t.w);
    sum += Complex(t.c[static_cast<std::size_t>(k)], Real(0L, t.w)) / denom;
  }
  const Complex za = w + Complex(t.a, 0, t.w);
  const Complex half(Real(Rational(mpz_class(1), mpz_class(2)), t.w), Real(0L, t.w));
  return exp((w + half) * log(za) - za) * sum;
}

}  // namespace

Complex gamma(const Complex& z, Precision p) {
  if (z.im().is_zero() && z.re().sign() <= 0 && mpfr_integer_p(z.re().get())) {
    throw DomainError("gamma: pole at a non-positive integer");
  }
  const auto table = spouge_table(p);
  const Complex zw = z.with_precision(table->w);
  long shift = 0;
  const double re = z.re().to_double();
  if (re < 1.5) shift = static_cast<long>(std::ceil(1.5 - re));
  Complex shifted = zw + Complex(shift - 1, 0, table->w);
  Complex g = spouge(shifted, *table);
  for (long j = 0; j < shift; ++j) g /= zw + Complex(j, 0, table->w);
  return g.with_precision(p);
}

Real gamma(const Real& x, Precision p) { return gamma(Complex(x), p).re(); }

Complex xi(const Complex& s, Precision p) {
  const Precision w = p + 32;
  const Complex sw = s.with_precision(w);
  const Complex half_s = sw * Rational(mpz_class(1), mpz_class(2));
  const Complex g = gamma(half_s + one_like(half_s), w);
  const Complex pi_pow = exp(-(half_s * log(pi(w))));
  const Complex z1 = zeta_pole_free(sw, w);
  return (g * pi_pow * z1 * 2L).with_precision(p);
}

}  // namespace trio::hp
