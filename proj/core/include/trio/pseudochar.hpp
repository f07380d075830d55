#pragma once

#include <string_view>
#include <vector>

#include "trio/hp/real.hpp"
#include "trio/pi_scaled.hpp"
#include "trio/report.hpp"

namespace trio::pseudo {

// Pseudo-characteristic polynomials. With c_k = pi^{2k} / (2k+1)!:
//   p_s(x) = sum_{k=1}^{s-1} (-1)^{k-1} c_k x^{2k}
//   q_s(x) = sum_{k=0}^{s-1} (-1)^k c_k x^{2k}
// and z, t, e, f add to p_s the constants
//   (-1)^{s-1} s c_s,  (-1)^{s-1} pi^{2s} / (4 (2s)!),
//   (-1)^{s-1} c_s / 2,  (-1)^{s-1} (2s-1) c_s / 4.

enum class Kind { p, q, z, t, e, f };

Kind parse_kind(std::string_view name);
std::string_view to_string(Kind kind);

struct PseudoPoly {
  Kind kind = Kind::p;
  unsigned s = 0;
  std::vector<PiScaled> coeffs;  // coeffs[k] multiplies x^{2k}; coeffs[0] is the constant
};

PseudoPoly pseudo_poly(Kind kind, unsigned s);

/// Horner evaluation in x^2 at precision p; s >= 1, p >= 64.
hp::Real eval_pseudo(Kind kind, unsigned s, const hp::Real& x, hp::Precision p);

/// p_s + q_s = 1 and the constant offsets of z, t, e, f, exactly, s <= s_max.
Report verify_definitions(unsigned s_max);

/// Bits needed by verify_inequalities for orders up to s_max: 4 k + 64 with k = 2 s_max.
hp::Precision inequality_required_precision(unsigned s_max);

/// For s in [s_min, s_max] and k in {2s, 2s-1}, the four proven two-sided
/// bounds of z_s(zeta(k)), t_s(theta(k)), 1 + q_s(zeta(k)) and
/// 1 + q_s(theta(k)) from their thresholds 17, 38, 34, 114 on, with
/// {x} = x - 1. The analogous bounds for e_s(eta(k)), f_s(phi(k)) and
/// 1 + q_s(eta(k)) are extrapolated rows, and the smallest s from which each
/// proven bound holds up to its threshold is observational. Values are
/// computed with k extra guard bits since {theta(k)}^3 is about 3^{-3k}.
/// Throws PrecisionError below inequality_required_precision(s_max).
Report verify_inequalities(unsigned s_min, unsigned s_max, hp::Precision p);

inline constexpr unsigned kDecayThresholds[5] = {9, 34, 76, 68, 228};

/// F_0(s) = pi^s / s! and F_0 divided by {zeta(s)}^2, {theta(s)}^2,
/// {zeta(s)}^3, {theta(s)}^3; checks F_i(s) <= (2k)^{-(s - t_i)} for
/// k in {1, 2}, s in [t_i, t_i + 50] with s >= k t_i. Requires p >= 1200.
Report verify_factorial_decay(hp::Precision p);

/// p_s(x) and q_s(x) against the sine form with the tail
/// sum_{k>=s} (-1)^k (pi x)^{2k} / (2k+1)! summed to
/// convergence, residual < 2^{-P+32}; also that the tail shrinks in s once
/// its terms decrease. Grid points must lie in (0, 4), s_max <= 40.
Report verify_sine_form(unsigned s_max, const std::vector<hp::Real>& x_grid, hp::Precision p);

/// The default grid {0.25, 0.5, 1, 1.37, 1.5, 2, 2.75, 3, 3.5, 3.9}.
std::vector<hp::Real> default_sine_grid(hp::Precision p);

/// Euler-product bounds on zeta, 1/zeta, eta, theta, the consecutive-integer
/// bounds with their floors, and the zeta/phi interval bounds for
/// s = 2..s_max. Requires p >= 2 s_max + 64.
Report elementary_bounds(unsigned s_max, hp::Precision p);

}  // namespace trio::pseudo
