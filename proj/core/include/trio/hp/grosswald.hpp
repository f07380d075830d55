#pragma once

#include "trio/hp/complex.hpp"
#include "trio/report.hpp"

namespace trio::hp {

struct GrosswaldValue {
  long s_index = 0;
  Complex z;
  Complex value;
  long terms_used = 0;
};

/// F_s(z) = sum_n n^{-s} q^n / (1 - q^n), q = e^{2 pi i z}, Im z > 0. The sum
/// stops once |q|^n / (1 - |q|)^2 < 2^{-P-20}; `terms_override` > 0 forces
/// that many terms instead (used to certify the cutoff).
GrosswaldValue grosswald_F(long s, const Complex& z, Precision p, long terms_override = 0);

/// sum_{n>=1} n^{-m} / (e^{c n} - 1) for c > 0.
Real lambert_sum(long m, const Real& c, Precision p);

/// Grosswald's transformation at z in {i, i/2, 2i}, its combination with the
/// even/odd link, the parity-specific special cases at i/2 and i, and the
/// positivity of the two transcendence sums. Residual bound 2^{-P+32};
/// requires P >= 192.
Report verify_grosswald_identities(unsigned s, Precision p);

/// Ramanujan's odd-zeta identity at alpha with beta = pi^2 / alpha. The
/// checked form carries (-beta)^{-s}; the form with beta^{-s} is reported as
/// an observational row. Residual bound 2^{-P+40}.
Report verify_ramanujan_identity(unsigned s, const Real& alpha, Precision p);

}  // namespace trio::hp
