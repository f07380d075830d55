#include "trio/li.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "trio/hp/special.hpp"
#include "trio/zetafam.hpp"

namespace trio::li {

namespace {

using hp::Complex;
using hp::Precision;
using hp::Real;

constexpr long kMaxContourPoints = 8192;

Complex phi_at(const Complex& z, Precision w) { return hp::xi(one_like(z) / (one_like(z) - z), w); }

// Samples phi at r e^{2 pi i k / N} for k = 0..N/2; the rest follow by
// conjugation. Entries already present (from N/2) are kept.
void sample(std::vector<Complex>& values, long n, Precision w, unsigned workers) {
  const long half = n / 2;
  std::vector<Complex> next(static_cast<std::size_t>(half + 1));
  std::vector<long> todo;
  for (long k = 0; k <= half; ++k) {
    if (k % 2 == 0 && !values.empty()) {
      next[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(k / 2)];
    } else {
      todo.push_back(k);
    }
  }
  const Real radius(Rational(1, 8), w);
  const Real two_pi = ldexp(hp::pi(w), 1);
  auto run = [&](std::size_t first) {
    for (std::size_t i = first; i < todo.size(); i += workers) {
      const long k = todo[i];
      const Real theta = two_pi * Rational(k, n);
      const Complex z(radius * cos(theta), radius * sin(theta));
      next[static_cast<std::size_t>(k)] = phi_at(z, w);
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run, t);
  }
  values = std::move(next);
}

// a_j = 8^j / N sum_k phi(z_k) e^{-2 pi i j k / N}, folded over conjugate pairs.
std::vector<Real> coefficients(const std::vector<Complex>& values, long n, unsigned n_max, Precision w) {
  const long half = n / 2;
  const Real two_pi = ldexp(hp::pi(w), 1);
  std::vector<Real> a;
  a.reserve(n_max);
  for (unsigned j = 1; j <= n_max; ++j) {
    Real acc = values[0].re();
    acc += j % 2 ? -values[static_cast<std::size_t>(half)].re() : values[static_cast<std::size_t>(half)].re();
    for (long k = 1; k < half; ++k) {
      const Real theta = two_pi * Rational(static_cast<long>(j) * k % n, n);
      const Complex& f = values[static_cast<std::size_t>(k)];
      acc += ldexp(f.re() * cos(theta) + f.im() * sin(theta), 1);
    }
    a.push_back(ldexp(acc, 3 * static_cast<long>(j)) / n);
  }
  return a;
}

}  // namespace

Real phi(const Real& z, Precision p) { return phi_at(Complex(z.with_precision(p + 32)), p + 32).re().with_precision(p); }

TaylorA taylor_a(unsigned n_max, Precision p, unsigned workers) {
  if (n_max == 0) throw DomainError("taylor_a: n_max must be >= 1");
  if (p < 128) throw PrecisionError("taylor_a: precision below 128 bits", 128);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  TaylorA out;
  out.precision = p;
  out.working = p + 3 * static_cast<Precision>(n_max) + 64;
  long n = 64;
  while (n < 4 * static_cast<long>(n_max)) n *= 2;

  std::vector<Complex> values;
  sample(values, n, out.working, workers);
  std::vector<Real> prev = coefficients(values, n, n_max, out.working);
  const long tol = 40 - static_cast<long>(p);
  long worst = 0;
  for (n *= 2; n <= kMaxContourPoints; n *= 2) {
    ++out.rounds;
    sample(values, n, out.working, workers);
    std::vector<Real> cur = coefficients(values, n, n_max, out.working);
    worst = std::numeric_limits<long>::min();
    for (unsigned j = 0; j < n_max; ++j) {
      const Real d = abs(cur[j] - prev[j]);
      if (!d.is_zero()) worst = std::max(worst, d.exponent2());
    }
    if (worst <= tol) {
      out.contour_points = n;
      out.stability_log2 = worst == std::numeric_limits<long>::min() ? -1e9 : static_cast<double>(worst);
      for (auto& x : cur) out.a.push_back(x.with_precision(p));
      return out;
    }
    prev = std::move(cur);
  }
  throw ConvergenceError("taylor_a: coefficients unstable at N_c = " + std::to_string(kMaxContourPoints) +
                         " (last difference 2^" + std::to_string(worst) + ", target 2^" + std::to_string(tol) +
                         ", working " + std::to_string(out.working) + " bits)");
}

Rational lambda_determinant_literal(std::span<const Rational> a, unsigned n) {
  require_terms(a.size(), n);
  if (n > mcl::kNaiveMaxOrder) throw DomainError("lambda_determinant_literal: n > 12");
  mcl::Matrix m(n, std::vector<Rational>(n));
  for (unsigned i = 0; i < n; ++i) {
    m[i][0] = -(a[i] * Rational(i + 1));
    for (unsigned j = 1; j <= i + 1 && j < n; ++j) m[i][j] = j == i + 1 ? Rational(1) : a[i - j];
  }
  const Rational det = mcl::determinant(m);
  return n % 2 ? -det : det;
}

Report verify_algebraic(unsigned trials, unsigned max_n, std::uint64_t seed) {
  if (max_n == 0 || max_n > mcl::kNaiveMaxOrder) throw DomainError("verify_algebraic: max_n must be in 1..12");
  Report report("li.algebraic");
  std::mt19937_64 rng(seed);
  unsigned failures[4] = {0, 0, 0, 0};
  unsigned unscaled_matches = 0, total = 0;
  std::string first_bad;
  for (unsigned trial = 0; trial < trials; ++trial) {
    const std::vector<Rational> a = mcl::random_sequence(rng, max_n);
    const std::span<const Rational> view(a);
    const std::vector<Rational> rec = lambda_sequence(view, max_n);
    std::vector<Rational> A;
    for (unsigned k = 1; k <= max_n; ++k) A.push_back(a[k - 1] * Rational(k));
    for (unsigned n = 1; n <= max_n; ++n) {
      ++total;
      const Rational& lambda = rec[n - 1];
      const bool ok[4] = {lambda_composition(view, n) == lambda, lambda_determinant(view, n) == lambda,
                          lambda_determinant_literal(view, n) == lambda,
                          -mcl::psi<Rational>(view.first(n), A, n) == lambda};
      for (int r = 0; r < 4; ++r) {
        if (!ok[r]) {
          ++failures[r];
          if (first_bad.empty()) first_bad = "trial " + std::to_string(trial) + " n " + std::to_string(n);
        }
      }
      if (log_phi_coefficient(view, n) == lambda) ++unscaled_matches;
    }
  }
  const std::string of = " of " + std::to_string(total);
  const char* ids[4] = {"composition", "determinant.recurrence", "determinant.literal", "determinant.negated-psi"};
  const char* refs[4] = {"n times the composition sum equals lambda_n", "Psi_n(a, -A) by the row recurrence",
                         "(-1)^n det L_n", "-Psi_n(a, A) by the column recurrence"};
  for (int r = 0; r < 4; ++r) {
    report.check(ids[r], refs[r], failures[r] == 0, std::to_string(total - failures[r]) + of + " equal",
                 "all equal", failures[r] ? first_bad : "");
  }
  report.observe("composition.uncorrected", "composition sum without the factor n",
                 std::to_string(unscaled_matches) + of + " equal lambda_n", "ratio 1/n");
  return report;
}

LiReport li_report(unsigned n_max, Precision p, unsigned workers) {
  if (n_max == 0 || n_max > 30) throw DomainError("li_report: n_max must be in 1..30");
  LiReport out;
  out.report = Report("li.p" + std::to_string(p));
  out.taylor = taylor_a(n_max, p, workers);
  const std::vector<Real>& a = out.taylor.a;
  const std::span<const Real> view(a);
  const std::vector<Real> rec = lambda_sequence(view, n_max);

  bool all_positive = true;
  for (const auto& x : a) all_positive = all_positive && x.sign() > 0;
  out.report.check("a.positive", "a_j > 0 for every computed j", all_positive, a.front().to_string(20),
                   "> 0");
  const long stable_tol = 40 - static_cast<long>(p);
  out.report.check("a.stability", "a_j from N_c and N_c/2 contour points agree",
                   out.taylor.stability_log2 <= static_cast<double>(stable_tol),
                   "2^" + std::to_string(static_cast<long>(out.taylor.stability_log2)),
                   "2^" + std::to_string(stable_tol), "N_c=" + std::to_string(out.taylor.contour_points));

  const long spread_tol = 48 - static_cast<long>(p);
  bool increasing = true;
  for (unsigned n = 1; n <= n_max; ++n) {
    LiRow row;
    row.n = n;
    row.a = a[n - 1];
    row.lambda = rec[n - 1];
    row.determinant = lambda_determinant(view, n);
    Real spread = abs(row.determinant - row.lambda);
    if (n <= kCompositionMaxOrder) {
      row.has_composition = true;
      row.composition = lambda_composition(view, n);
      spread = std::max({spread, abs(row.composition - row.lambda), abs(row.composition - row.determinant)});
    }
    row.spread = spread;
    const std::string id = "n" + std::to_string(n);
    out.report.check(id + ".spread", "route spread < 2^{-P+48}", spread.is_zero() || spread.exponent2() <= spread_tol,
                     spread.to_string(6), "2^" + std::to_string(spread_tol));
    const bool positive = row.lambda > spread;
    const std::string verdict = positive ? "positive" : (row.lambda < -spread ? "violation" : "indeterminate");
    out.report.check(id + ".lambda", "lambda_n > route spread", positive, row.lambda.to_string(30), verdict,
                     spread.to_string(6));
    if (n > 1 && !(row.lambda > out.rows.back().lambda)) increasing = false;
    out.rows.push_back(std::move(row));
  }
  out.report.observe("trend", "lambda_n increasing in n", increasing ? "increasing" : "not monotone",
                     "n <= " + std::to_string(n_max));
  return out;
}

std::vector<BaezDuarteRow> baez_duarte_c(unsigned t_max, Precision p) {
  if (t_max > 64) throw DomainError("baez_duarte_c: t_max must be <= 64");
  if (p < 64) throw PrecisionError("baez_duarte_c: precision below 64 bits", 64);
  const Precision w = p + t_max + 64;
  // 1/zeta(2s+2) = w_s x^{s+1} with x = pi^{-2} and exact rational w_s.
  std::vector<Rational> inv;
  for (unsigned s = 0; s <= t_max; ++s) inv.push_back(Rational(1) / zeta::zeta_even(s + 1).coeff());
  const Real pw = hp::pi(w);
  const Real x = Real(1L, w) / (pw * pw);

  std::vector<BaezDuarteRow> out;
  for (unsigned t = 0; t <= t_max; ++t) {
    Real acc(0L, w);
    for (unsigned s = t + 1; s-- > 0;) {
      Rational c = inv[s] * Rational(binomial(t, s));
      if (s % 2) c = -c;
      acc = acc * x + Real(c, w);
    }
    BaezDuarteRow row;
    row.t = t;
    row.c = (acc * x).with_precision(p);
    row.scaled = abs(row.c) * pow(Real(static_cast<long>(t), p), Real(Rational(3, 4), p));
    out.push_back(std::move(row));
  }
  return out;
}

Report baez_duarte_report(unsigned t_max, Precision p) {
  Report report("li.baez-duarte");
  const std::vector<BaezDuarteRow> rows = baez_duarte_c(t_max, p);
  const std::vector<BaezDuarteRow> twice = baez_duarte_c(t_max, 2 * p);
  const Real pw = hp::pi(p);
  const Real z2 = pw * pw / 6L;
  const Real z4 = pow(pw, 4) / 90L;
  const long tol = 8 - static_cast<long>(p);
  auto close = [&](const Real& x, const Real& y) { return hp::close(x, y, tol); };
  const Real c0 = Real(1L, p) / z2;
  report.check("c0", "c_0 = 1/zeta(2)", close(rows[0].c, c0), rows[0].c.to_string(30), c0.to_string(30));
  if (t_max >= 1) {
    const Real c1 = Real(1L, p) / z2 - Real(1L, p) / z4;
    report.check("c1", "c_1 = 1/zeta(2) - 1/zeta(4)", close(rows[1].c, c1), rows[1].c.to_string(30),
                 c1.to_string(30));
  }
  for (const auto& row : rows) {
    const std::string id = "t" + std::to_string(row.t);
    const Real d = abs(row.c - twice[row.t].c.with_precision(p));
    report.check(id + ".stable", "c_t unchanged when P doubles", d.is_zero() || d.exponent2() <= tol,
                 row.c.to_string(30), twice[row.t].c.to_string(30), d.to_string(6));
    report.observe(id + ".scaled", "|c_t| t^{3/4}", row.scaled.to_string(20));
  }
  return report;
}

}  // namespace trio::li
