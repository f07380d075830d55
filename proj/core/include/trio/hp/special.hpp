#pragma once

#include "trio/hp/complex.hpp"
#include "trio/hp/real.hpp"

namespace trio::hp {

/// pi by the Gauss-Legendre AGM, cached per precision (thread-safe).
Real pi(Precision p);

/// Euler-Maclaurin tuning actually used for one zeta evaluation.
struct ZetaPlan {
  long n_terms = 0;         // N: direct sum over n < N
  long corrections = 0;     // Bernoulli correction terms used
  Precision working = 0;    // internal precision in bits
};

/// zeta(s) at precision p. Throws DomainError at the pole s = 1 and
/// PrecisionError when p < 64 or the parameters cannot reach the target.
/// `scale` multiplies the automatically chosen N (used by self-tests).
Complex zeta(const Complex& s, Precision p, double scale = 1.0, ZetaPlan* plan = nullptr);
Real zeta(const Real& s, Precision p, double scale = 1.0, ZetaPlan* plan = nullptr);

/// (s - 1) zeta(s), analytic at s = 1 where it equals 1.
Complex zeta_pole_free(const Complex& s, Precision p);

/// Gamma(z) by Spouge's approximation with an upward argument shift.
Complex gamma(const Complex& z, Precision p);
Real gamma(const Real& x, Precision p);

/// xi(s) = s (s - 1) pi^{-s/2} Gamma(s/2) zeta(s), so xi(1) = 1.
Complex xi(const Complex& s, Precision p);

}  // namespace trio::hp
