#pragma once

#include <string_view>
#include <vector>

#include "trio/pi_scaled.hpp"
#include "trio/report.hpp"

namespace trio::zeta {

enum class Family { zeta, eta, theta, phi };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

struct ZetaFamilyValue {
  Family family;
  unsigned arg;  // the even argument 2s
  PiScaled value;
};

/// zeta(2s) = (-1)^{s+1} 2^{2s-1} pi^{2s} B_{2s} / (2s)!, s >= 1.
PiScaled zeta_even(unsigned s);
PiScaled eta_even(unsigned s);    // (1 - 2^{1-2s}) zeta(2s)
PiScaled theta_even(unsigned s);  // (1 - 2^{-2s}) zeta(2s)
PiScaled phi_even(unsigned s);    // 2^{-2s} zeta(2s)

/// Closed-form value of a family member at the even argument 2s.
ZetaFamilyValue family_value(Family family, unsigned s);

/// The six linear recurrences of the form
///   X(2s) = (-1)^{s-1} (base(s) pi^{2s} + sum_{k<s} (-1)^{s-k} c(s,k) pi^{2k} Y(2s-2k)),
/// where Y is either zeta or the family itself.
enum class Recurrence { zeta_linear, theta_from_zeta, theta_self, phi_from_zeta, phi_self, eta_self };

inline constexpr Recurrence kAllRecurrences[] = {
    Recurrence::zeta_linear, Recurrence::theta_from_zeta, Recurrence::theta_self,
    Recurrence::phi_from_zeta, Recurrence::phi_self, Recurrence::eta_self};

std::string_view to_string(Recurrence r);
Family family_of(Recurrence r);

/// Values X(2), ..., X(2 max_s) produced by the recurrence alone; the
/// zeta inputs of the *_from_zeta forms come from zeta_linear.
std::vector<PiScaled> recurrence_values(Recurrence r, unsigned max_s);

/// Every recurrence against the closed forms for s <= max_s. One case per
/// recurrence; a failure names the first bad s.
Report verify_family_recurrences(unsigned max_s);

/// theta + phi = zeta and theta - phi = eta for s <= max_s.
Report verify_family_relations(unsigned max_s);

/// Quadratic recurrences, type-1 determinant forms and positive composition
/// sums for theta(2s+2) and zeta(2s+2). The zeta determinant form is also
/// evaluated without the 1/(2^{2s+2}-1) factor and reported
/// as an observational row.
Report quadratic_identities(unsigned s);

/// Number of monomials weighted by multiplicity in the double sums: per t,
/// C(s-1,t-1) for the plain sum and C(s-1,t-1) 2^{t-1} for the 2^t-weighted
/// one, with totals 2^{s-1} and 3^{s-1}.
Report composition_term_counts(unsigned s);

/// The four members handled by the four-way check.
enum class Scaled { two_eta, zeta, four_phi, four_theta };

Scaled parse_scaled(std::string_view name);
std::string_view to_string(Scaled f);

/// Closed form of 2 eta(2s), zeta(2s), 4 phi(2s) or 4 theta(2s).
PiScaled scaled_value(Scaled f, unsigned s);

/// Determinant, two recurrences and composition sum against the closed form.
/// Requires 1 <= s <= 24.
Report fourway(unsigned s, Scaled f);

/// The classical alternating identity sum_k (-1)^k pi^{2k}/(2k+1)!
/// (1 - 2^{2k-2s+1}) zeta(2s-2k), evaluated with zeta(0) = -1/2.
struct ClassicResidual {
  unsigned s;
  PiScaled sum;           // k = 1..s
  PiScaled sum_with_k0;   // k = 0..s
  PiScaled vs_zeta;       // zeta(2s) - sum
  PiScaled vs_zero;       // sum - 0
};

ClassicResidual classic_recurrence_residual(unsigned s);

/// The zeta(14) display: closed form, pair weights of the quadratic
/// recurrence, the unnormalized combination, the positive and
/// alternating expansions.
Report zeta14_check();

}  // namespace trio::zeta
