#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trio/errors.hpp"
#include "trio/hp/real.hpp"
#include "trio/mcl.hpp"
#include "trio/report.hpp"

namespace trio::li {

// Li coefficients. a_j are the Taylor coefficients of
// phi(z) = xi(1 / (1 - z)) = 1 + sum a_j z^j and lambda_n are tied to them by
// lambda_n = n a_n - sum_{j<n} lambda_j a_{n-j}. Sequences are 0-indexed:
// a[0] holds a_1.

struct TaylorA {
  std::vector<hp::Real> a;
  hp::Precision precision = 0;  // target P
  hp::Precision working = 0;    // bits used for xi on the contour
  long contour_points = 0;      // N_c of the accepted estimate
  unsigned rounds = 0;          // N_c doublings tried
  double stability_log2 = 0;    // log2 max_j |a_j(N_c) - a_j(N_c / 2)|
};

/// Discrete Cauchy coefficients of phi on |z| = 1/8. N_c starts at 64 (or
/// the next power of two >= 4 n_max) and doubles until the estimates from
/// N_c and 2 N_c agree to 2^{-P+40}. `workers` = 0 uses the hardware
/// concurrency. Requires n_max >= 1 and P >= 128; throws ConvergenceError
/// when N_c would exceed 8192.
TaylorA taylor_a(unsigned n_max, hp::Precision p, unsigned workers = 0);

/// phi(z) = xi(1 / (1 - z)) for real z, the finite-difference oracle input.
hp::Real phi(const hp::Real& z, hp::Precision p);

inline void require_terms(std::size_t have, std::size_t n) {
  if (n == 0) throw DomainError("li: n must be >= 1");
  if (have < n) {
    throw DomainError("li: " + std::to_string(have) + " coefficients given, " + std::to_string(n) + " needed");
  }
}

/// lambda_1..lambda_n by the recurrence.
template <class T>
std::vector<T> lambda_sequence(std::span<const T> a, std::size_t n) {
  require_terms(a.size(), n);
  std::vector<T> lambda;
  lambda.reserve(n);
  for (std::size_t m = 1; m <= n; ++m) {
    T acc = a[m - 1] * static_cast<long>(m);
    for (std::size_t j = 1; j < m; ++j) acc -= lambda[j - 1] * a[m - j - 1];
    lambda.push_back(acc);
  }
  return lambda;
}

template <class T>
T lambda_recurrence(std::span<const T> a, std::size_t n) {
  return lambda_sequence(a, n).back();
}

inline constexpr unsigned kCompositionMaxOrder = 22;

/// sum_t (-1)^{t-1}/t sum_{k_1+..+k_t=n} a_{k_1}..a_{k_t}: the coefficient of
/// z^n in log phi, which is lambda_n / n.
template <class T>
T log_phi_coefficient(std::span<const T> a, unsigned n) {
  require_terms(a.size(), n);
  if (n > kCompositionMaxOrder) throw DomainError("li: composition route limited to n <= 22");
  using trio::one_like;
  using trio::zero_like;
  T total = zero_like(a[0]);
  mcl::for_each_composition(n, [&](const mcl::Composition& c) {
    T term = one_like(a[0]) * Rational(mcl::multinomial(c), mpz_class(c.t));
    for (std::size_t i = 0; i < c.d.size(); ++i) {
      for (unsigned e = 0; e < c.d[i]; ++e) term *= a[i];
    }
    if (c.t % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  });
  return total;
}

/// lambda_n = n times the composition sum.
template <class T>
T lambda_composition(std::span<const T> a, unsigned n) {
  return log_phi_coefficient(a, n) * static_cast<long>(n);
}

/// M_n = Psi_n(a, -A) with A_k = k a_k, by the last-row MCL recurrence.
template <class T>
T lambda_determinant(std::span<const T> a, std::size_t n) {
  require_terms(a.size(), n);
  std::vector<T> H;
  H.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) H.push_back(-(a[k - 1] * static_cast<long>(k)));
  return mcl::psi_row<T>(a.first(n), H, n);
}

/// (-1)^n det L_n from the literal n x n matrix; n <= 12.
Rational lambda_determinant_literal(std::span<const Rational> a, unsigned n);

/// Recurrence, composition, MCL recurrence, the literal determinant and
/// -Psi(a, A) compared exactly on random rational a for n <= max_n. The
/// composition sum without the factor n is recorded as observational.
Report verify_algebraic(unsigned trials, unsigned max_n, std::uint64_t seed);

struct LiRow {
  unsigned n = 0;
  hp::Real a;
  hp::Real lambda;  // recurrence route
  hp::Real composition;
  hp::Real determinant;
  hp::Real spread;  // max pairwise route difference
  bool has_composition = false;
};

struct LiReport {
  TaylorA taylor;
  std::vector<LiRow> rows;
  Report report{"li"};
};

/// lambda_n by every route for n <= n_max (<= 30). Each row checks the
/// spread against 2^{-P+48} and lambda_n > spread; a_j > 0 and contour
/// stability are checked once. The increasing trend is observational.
LiReport li_report(unsigned n_max, hp::Precision p, unsigned workers = 0);

struct BaezDuarteRow {
  unsigned t = 0;
  hp::Real c;
  hp::Real scaled;  // |c_t| t^{3/4}
};

/// c_t = sum_s (-1)^s C(t,s) / zeta(2s+2) for t <= t_max (<= 64), from exact
/// rational multiples of pi^{-2s-2} summed with t_max + 64 guard bits.
std::vector<BaezDuarteRow> baez_duarte_c(unsigned t_max, hp::Precision p);

/// The c_t table as a report: c_0, c_1 and stability under doubling P are
/// checked, |c_t| t^{3/4} is observational.
Report baez_duarte_report(unsigned t_max, hp::Precision p);

}  // namespace trio::li
