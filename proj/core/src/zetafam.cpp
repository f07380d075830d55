#include "trio/zetafam.hpp"

#include <array>
#include <string>

#include "trio/bernoulli.hpp"
#include "trio/errors.hpp"
#include "trio/mcl.hpp"

namespace trio::zeta {

namespace {

Rational inv_factorial(unsigned n) { return Rational(mpz_class(1), factorial(n)); }

Rational sign(unsigned e) { return e % 2 ? Rational(-1) : Rational(1); }

void require_positive(unsigned s, const char* what) {
  if (s == 0) throw DomainError(std::string(what) + ": s must be >= 1");
}

// Records the first index where `ok(s)` fails for s = 1..max_s.
template <class Ok, class Show>
void check_range(Report& report, std::string id, std::string ref, unsigned max_s, Ok ok, Show show) {
  for (unsigned s = 1; s <= max_s; ++s) {
    if (!ok(s)) {
      auto [lhs, rhs] = show(s);
      report.check(std::move(id), std::move(ref), false, "s=" + std::to_string(s) + ": " + lhs, rhs);
      return;
    }
  }
  report.check(std::move(id), std::move(ref), true, "all s <= " + std::to_string(max_s), "closed form");
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "zeta") return Family::zeta;
  if (name == "eta") return Family::eta;
  if (name == "theta") return Family::theta;
  if (name == "phi") return Family::phi;
  throw DomainError("unknown family: " + std::string(name));
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::zeta: return "zeta";
    case Family::eta: return "eta";
    case Family::theta: return "theta";
    case Family::phi: return "phi";
  }
  return "?";
}

PiScaled zeta_even(unsigned s) {
  require_positive(s, "zeta_even");
  const Rational c = sign(s + 1) * Rational::pow2(2 * static_cast<long>(s) - 1) *
                     bernoulli::bernoulli(2 * s) * inv_factorial(2 * s);
  return PiScaled(c, 2 * static_cast<int>(s));
}

PiScaled eta_even(unsigned s) {
  return zeta_even(s) * (Rational(1) - Rational::pow2(1 - 2 * static_cast<long>(s)));
}

PiScaled theta_even(unsigned s) {
  return zeta_even(s) * (Rational(1) - Rational::pow2(-2 * static_cast<long>(s)));
}

PiScaled phi_even(unsigned s) { return zeta_even(s) * Rational::pow2(-2 * static_cast<long>(s)); }

ZetaFamilyValue family_value(Family family, unsigned s) {
  switch (family) {
    case Family::zeta: return {family, 2 * s, zeta_even(s)};
    case Family::eta: return {family, 2 * s, eta_even(s)};
    case Family::theta: return {family, 2 * s, theta_even(s)};
    case Family::phi: return {family, 2 * s, phi_even(s)};
  }
  throw DomainError("family_value: bad family");
}

std::string_view to_string(Recurrence r) {
  switch (r) {
    case Recurrence::zeta_linear: return "zeta.linear";
    case Recurrence::theta_from_zeta: return "theta.from-zeta";
    case Recurrence::theta_self: return "theta.self";
    case Recurrence::phi_from_zeta: return "phi.from-zeta";
    case Recurrence::phi_self: return "phi.self";
    case Recurrence::eta_self: return "eta.self";
  }
  return "?";
}

Family family_of(Recurrence r) {
  switch (r) {
    case Recurrence::zeta_linear: return Family::zeta;
    case Recurrence::theta_from_zeta:
    case Recurrence::theta_self: return Family::theta;
    case Recurrence::phi_from_zeta:
    case Recurrence::phi_self: return Family::phi;
    case Recurrence::eta_self: return Family::eta;
  }
  return Family::zeta;
}

namespace {

Rational base_coeff(Recurrence r, unsigned s) {
  const Rational odd(2 * static_cast<long>(s) - 1);
  switch (r) {
    case Recurrence::zeta_linear: return Rational(s) * inv_factorial(2 * s + 1);
    case Recurrence::theta_from_zeta: return odd * inv_factorial(2 * s) / Rational(4);
    case Recurrence::theta_self: return inv_factorial(2 * s) / Rational(4);
    case Recurrence::phi_from_zeta:
    case Recurrence::phi_self: return odd * inv_factorial(2 * s + 1) / Rational(4);
    case Recurrence::eta_self: return inv_factorial(2 * s + 1) / Rational(2);
  }
  return {};
}

Rational kernel_coeff(Recurrence r, unsigned s, unsigned k) {
  switch (r) {
    case Recurrence::theta_from_zeta: return inv_factorial(2 * k) / Rational(2);
    case Recurrence::phi_from_zeta:
      return inv_factorial(2 * k + 1) * Rational::pow2(-2 * static_cast<long>(s - k));
    default: return inv_factorial(2 * k + 1);
  }
}

bool uses_zeta(Recurrence r) {
  return r == Recurrence::theta_from_zeta || r == Recurrence::phi_from_zeta;
}

}  // namespace

std::vector<PiScaled> recurrence_values(Recurrence r, unsigned max_s) {
  std::vector<PiScaled> zeta_values;
  if (uses_zeta(r)) zeta_values = recurrence_values(Recurrence::zeta_linear, max_s);
  std::vector<PiScaled> out;  // out[s-1] = X(2s)
  out.reserve(max_s);
  for (unsigned s = 1; s <= max_s; ++s) {
    const std::vector<PiScaled>& y = uses_zeta(r) ? zeta_values : out;
    PiScaled acc(base_coeff(r, s), 2 * static_cast<int>(s));
    for (unsigned k = 1; k < s; ++k) {
      acc += PiScaled(sign(s - k) * kernel_coeff(r, s, k), 2 * static_cast<int>(k)) * y[s - k - 1];
    }
    out.push_back(acc * sign(s - 1));
  }
  return out;
}

Report verify_family_recurrences(unsigned max_s) {
  Report report("zeta.recurrences");
  for (Recurrence r : kAllRecurrences) {
    const auto values = recurrence_values(r, max_s);
    const Family f = family_of(r);
    check_range(
        report, std::string(to_string(r)), "linear recurrence", max_s,
        [&](unsigned s) { return values[s - 1] == family_value(f, s).value; },
        [&](unsigned s) {
          return std::pair{values[s - 1].to_string(), family_value(f, s).value.to_string()};
        });
  }
  return report;
}

Report verify_family_relations(unsigned max_s) {
  Report report("zeta.relations");
  check_range(
      report, "theta+phi", "zeta = theta + phi", max_s,
      [](unsigned s) { return theta_even(s) + phi_even(s) == zeta_even(s); },
      [](unsigned s) { return std::pair{(theta_even(s) + phi_even(s)).to_string(), zeta_even(s).to_string()}; });
  check_range(
      report, "theta-phi", "eta = theta - phi", max_s,
      [](unsigned s) { return theta_even(s) - phi_even(s) == eta_even(s); },
      [](unsigned s) { return std::pair{(theta_even(s) - phi_even(s)).to_string(), eta_even(s).to_string()}; });
  check_range(
      report, "theta.bstar", "theta from B*", max_s,
      [](unsigned s) { return bernoulli::theta_from_bstar(s) == theta_even(s); },
      [](unsigned s) {
        return std::pair{bernoulli::theta_from_bstar(s).to_string(), theta_even(s).to_string()};
      });
  return report;
}

namespace {

// 2 (-1)^{k-1} X(2k), k = 1..s.
std::vector<PiScaled> alternating_vector(PiScaled (*value)(unsigned), unsigned s) {
  std::vector<PiScaled> v;
  for (unsigned k = 1; k <= s; ++k) v.push_back(value(k) * (sign(k - 1) * Rational(2)));
  return v;
}

// sum over multiplicity vectors of 2^t multinomial prod X(2i)^{d_i}.
PiScaled positive_double_sum(PiScaled (*value)(unsigned), unsigned s) {
  PiScaled total;
  mcl::for_each_composition(s, [&](const mcl::Composition& c) {
    PiScaled term(Rational(mcl::multinomial(c)) * Rational::pow2(c.t));
    for (std::size_t i = 0; i < c.d.size(); ++i) {
      for (unsigned e = 0; e < c.d[i]; ++e) term *= value(static_cast<unsigned>(i + 1));
    }
    total += term;
  });
  return total;
}

void compare(Report& report, std::string id, std::string ref, const PiScaled& lhs, const PiScaled& rhs) {
  const bool ok = lhs == rhs;
  report.check(std::move(id), std::move(ref), ok, lhs.to_string(), rhs.to_string(),
               ok ? "0" : (lhs - rhs).to_string());
}

// Residual of two values that may differ in grade: reported as the ratio.
std::string ratio(const PiScaled& a, const PiScaled& b) {
  if (b.is_zero()) return "inf";
  return PiScaled(a.coeff() / b.coeff(), a.pi_pow() - b.pi_pow()).to_string();
}

}  // namespace

Report quadratic_identities(unsigned s) {
  require_positive(s, "quadratic_identities");
  Report report("zeta.quadratic.s" + std::to_string(s));
  const PiScaled pi2 = pi_power(2);
  const Rational sgn = sign(s);

  const PiScaled theta_target = theta_even(s + 1);
  PiScaled theta_quad;
  for (unsigned k = 0; k < s; ++k) theta_quad += phi_even(s - k) * theta_even(k + 1) * Rational(2);
  compare(report, "theta.quadratic", "theta quadratic recurrence", theta_quad, theta_target);

  const auto p = alternating_vector(&phi_even, s);
  const PiScaled theta_det = pi2 * mcl::delta(std::span<const PiScaled>(p), s) * (sgn / Rational(8));
  compare(report, "theta.determinant", "theta type-1 determinant", theta_det, theta_target);

  const PiScaled zeta_target = zeta_even(s + 1);
  const Rational big = Rational::pow2(2 * static_cast<long>(s) + 2) - Rational(1);
  PiScaled zeta_quad;
  for (unsigned k = 0; k < s; ++k) {
    const Rational w = Rational::pow2(2 * static_cast<long>(k) + 2) - Rational(1);
    zeta_quad += zeta_even(s - k) * zeta_even(k + 1) * w;
  }
  zeta_quad *= Rational(2) / big;
  compare(report, "zeta.quadratic", "zeta quadratic recurrence", zeta_quad, zeta_target);

  const auto q = alternating_vector(&zeta_even, s);
  const PiScaled zeta_det_display = pi2 * mcl::delta(std::span<const PiScaled>(q), s) * (sgn / Rational(2));
  report.observe("zeta.determinant.uncorrected", "zeta type-1 determinant without 1/(2^{2s+2}-1)",
                 zeta_det_display.to_string(), zeta_target.to_string(),
                 "ratio " + ratio(zeta_det_display, zeta_target));
  compare(report, "zeta.determinant", "zeta type-1 determinant", zeta_det_display / big, zeta_target);

  if (s <= mcl::kCompositionMaxOrder) {
    compare(report, "theta.compositions", "theta positive composition sum",
            pi2 * positive_double_sum(&phi_even, s) / Rational(8), theta_target);
    compare(report, "zeta.compositions", "zeta positive composition sum",
            pi2 * positive_double_sum(&zeta_even, s) / (Rational(2) * big), zeta_target);
  }
  return report;
}

Report composition_term_counts(unsigned s) {
  require_positive(s, "composition_term_counts");
  if (s > mcl::kCompositionMaxOrder) throw DomainError("composition_term_counts: s > 24");
  Report report("zeta.term-counts.s" + std::to_string(s));
  std::vector<mpz_class> plain(s), weighted(s);
  mcl::for_each_composition(s, [&](const mcl::Composition& c) {
    const mpz_class m = mcl::multinomial(c);
    plain[c.t - 1] += m;
    weighted[c.t - 1] += m << (c.t - 1);
  });
  mpz_class plain_total, weighted_total;
  bool per_t_ok = true;
  for (unsigned t = 1; t <= s; ++t) {
    const mpz_class c = bernoulli::binomial_cached(s - 1, t - 1);
    per_t_ok = per_t_ok && plain[t - 1] == c && weighted[t - 1] == mpz_class(c << (t - 1));
    plain_total += plain[t - 1];
    weighted_total += weighted[t - 1];
  }
  mpz_class three;
  mpz_ui_pow_ui(three.get_mpz_t(), 3, s - 1);
  const mpz_class two = mpz_class(1) << (s - 1);
  report.check("per-t", "C(s-1,t-1) and C(s-1,t-1) 2^{t-1}", per_t_ok, per_t_ok ? "match" : "mismatch",
               "binomial");
  report.check("plain-total", "coefficients sum to 2^{s-1}", plain_total == two, plain_total.get_str(),
               two.get_str());
  report.check("weighted-total", "coefficients sum to 3^{s-1}", weighted_total == three,
               weighted_total.get_str(), three.get_str());
  return report;
}

Scaled parse_scaled(std::string_view name) {
  if (name == "2eta" || name == "eta") return Scaled::two_eta;
  if (name == "zeta") return Scaled::zeta;
  if (name == "4phi" || name == "phi") return Scaled::four_phi;
  if (name == "4theta" || name == "theta") return Scaled::four_theta;
  throw DomainError("unknown scaled family: " + std::string(name));
}

std::string_view to_string(Scaled f) {
  switch (f) {
    case Scaled::two_eta: return "2eta";
    case Scaled::zeta: return "zeta";
    case Scaled::four_phi: return "4phi";
    case Scaled::four_theta: return "4theta";
  }
  return "?";
}

PiScaled scaled_value(Scaled f, unsigned s) {
  switch (f) {
    case Scaled::two_eta: return eta_even(s) * Rational(2);
    case Scaled::zeta: return zeta_even(s);
    case Scaled::four_phi: return phi_even(s) * Rational(4);
    case Scaled::four_theta: return theta_even(s) * Rational(4);
  }
  throw DomainError("scaled_value: bad family");
}

namespace {

// Weight column H for the type-2 determinant; empty for the type-1 member.
std::vector<Rational> weight_vector(Scaled f, unsigned s) {
  std::vector<Rational> w;
  for (unsigned k = 1; k <= s; ++k) {
    switch (f) {
      case Scaled::two_eta: return {};
      case Scaled::zeta: w.push_back(Rational(k) * inv_factorial(2 * k + 1)); break;
      case Scaled::four_phi: w.push_back(Rational(2 * k - 1) * inv_factorial(2 * k + 1)); break;
      case Scaled::four_theta: w.push_back(inv_factorial(2 * k)); break;
    }
  }
  return w;
}

// Factor in front of pi^{2s} times the plain composition sum.
Rational composition_prefactor(Scaled f, unsigned s) {
  const Rational odd_power = Rational::pow2(2 * static_cast<long>(s) - 1) - Rational(1);
  switch (f) {
    case Scaled::two_eta: return Rational(1);
    case Scaled::zeta: return Rational::pow2(2 * static_cast<long>(s) - 2) / odd_power;
    case Scaled::four_phi: return Rational(1) / odd_power;
    case Scaled::four_theta: return (Rational::pow2(2 * static_cast<long>(s)) - Rational(1)) / odd_power;
  }
  return {};
}

}  // namespace

Report fourway(unsigned s, Scaled f) {
  require_positive(s, "fourway");
  if (s > mcl::kCompositionMaxOrder) throw DomainError("fourway: s > 24");
  Report report("zeta.fourway." + std::string(to_string(f)) + ".s" + std::to_string(s));
  const int grade = 2 * static_cast<int>(s);
  const PiScaled target = scaled_value(f, s);
  compare(report, "closed-form", "closed form", target, target);

  const auto u = mcl::u_vector(s);
  const auto w = weight_vector(f, s);
  const Rational det = f == Scaled::two_eta ? mcl::delta(std::span<const Rational>(u), s)
                                            : mcl::psi(std::span<const Rational>(u), std::span<const Rational>(w), s);
  compare(report, "determinant", "MCL determinant", PiScaled(sign(s) * det, grade), target);

  // Column expansion: sum_{k=1}^{s} (-1)^{k-1} pi^{2k} w_k 2eta(2s-2k), 2eta(0) = 1.
  const auto& col = f == Scaled::two_eta ? u : w;
  PiScaled via_eta;
  for (unsigned k = 1; k <= s; ++k) {
    const PiScaled eta_part = k == s ? PiScaled(Rational(1)) : eta_even(s - k) * Rational(2);
    via_eta += PiScaled(sign(k - 1) * col[k - 1], 2 * static_cast<int>(k)) * eta_part;
  }
  compare(report, "recurrence.eta", "recurrence in 2eta", via_eta, target);

  // Row expansion in the member itself.
  PiScaled via_self(sign(s - 1) * col[s - 1], grade);
  for (unsigned k = 1; k < s; ++k) {
    via_self += PiScaled(sign(k - 1) * u[k - 1], 2 * static_cast<int>(k)) * scaled_value(f, s - k);
  }
  compare(report, "recurrence.self", "recurrence in the member", via_self, target);

  const Rational comp = sign(s) * mcl::delta_by_compositions(std::span<const Rational>(u), s);
  compare(report, "compositions", "signed composition sum",
          PiScaled(composition_prefactor(f, s) * comp, grade), target);
  return report;
}

ClassicResidual classic_recurrence_residual(unsigned s) {
  require_positive(s, "classic_recurrence_residual");
  const auto zeta_or_zero = [](unsigned j) { return j == 0 ? PiScaled(Rational(-1, 2)) : zeta_even(j); };
  const auto term = [&](unsigned k) {
    const Rational w = Rational(1) - Rational::pow2(2 * static_cast<long>(k) - 2 * static_cast<long>(s) + 1);
    return PiScaled(sign(k) * inv_factorial(2 * k + 1) * w, 2 * static_cast<int>(k)) * zeta_or_zero(s - k);
  };
  ClassicResidual out{s, {}, {}, {}, {}};
  for (unsigned k = 1; k <= s; ++k) out.sum += term(k);
  out.sum_with_k0 = out.sum + term(0);
  out.vs_zeta = zeta_even(s) - out.sum;
  out.vs_zero = out.sum;
  return out;
}

Report zeta14_check() {
  Report report("zeta.zeta14");
  const PiScaled z14 = zeta_even(7);
  compare(report, "closed-form", "zeta(14) = 2 pi^14 / 18243225", z14, PiScaled(Rational(2, 18243225), 14));

  // Pair weights (2^{2k+2}-1) + (2^{2(s-k)}-1) of zeta(2j) zeta(14-2j).
  std::array<long, 3> weights{};
  for (unsigned k = 0; k < 6; ++k) {
    const unsigned j = std::min(k + 1, 6 - k);
    weights[j - 1] += (1L << (2 * k + 2)) - 1;
  }
  const bool weights_ok = weights == std::array<long, 3>{4098, 1038, 318};
  report.check("pair-weights", "integer weights of the symmetric quadratic sum", weights_ok,
               std::to_string(weights[0]) + "," + std::to_string(weights[1]) + "," + std::to_string(weights[2]),
               "4098,1038,318");

  const PiScaled combo = zeta_even(1) * zeta_even(6) * Rational(4098) +
                         zeta_even(2) * zeta_even(5) * Rational(1038) + zeta_even(3) * zeta_even(4) * Rational(318);
  compare(report, "quadratic.normalized", "2/(2^14-1) times the weighted pair sum",
          combo * Rational(2, 16383), z14);
  report.observe("quadratic.uncorrected", "weighted pair sum without 2/(2^14-1)", combo.to_string(),
                 z14.to_string(), "ratio " + ratio(combo, z14));

  // Variant with weight 2 on zeta(6)^2 in the t = 2 group instead of the multinomial 1.
  const auto z = [](unsigned k) { return zeta_even(k); };
  const PiScaled t2_doubled = (z(1) * z(5) * Rational(2) + z(2) * z(4) * Rational(2) + z(3) * z(3) * Rational(2));
  const PiScaled t2_multinomial = (z(1) * z(5) * Rational(2) + z(2) * z(4) * Rational(2) + z(3) * z(3));
  const PiScaled tail = z(1) * z(1) * z(4) * Rational(4 * 3) + z(1) * z(2) * z(3) * Rational(4 * 6) +
                        z(2) * z(2) * z(2) * Rational(4) + z(1) * z(1) * z(1) * z(3) * Rational(8 * 4) +
                        z(1) * z(1) * z(2) * z(2) * Rational(8 * 6) +
                        z(1) * z(1) * z(1) * z(1) * z(2) * Rational(16 * 5) +
                        z(1) * z(1) * z(1) * z(1) * z(1) * z(1) * Rational(32);
  const PiScaled prefactor(Rational(1, 16383), 2);
  const PiScaled positive = prefactor * (z(6) + t2_multinomial * Rational(2) + tail);
  compare(report, "positive-expansion", "strictly positive composition expansion", positive, z14);
  const PiScaled positive_doubled = prefactor * (z(6) + t2_doubled * Rational(2) + tail);
  report.observe("positive-expansion.uncorrected", "positive expansion with 2 zeta(6)^2",
                 positive_doubled.to_string(), z14.to_string(), "ratio " + ratio(positive_doubled, z14));

  // Alternating expansion: 2^12/(2^13-1) pi^14 sum (-1)^{t+s} multinomial / prod (2i+1)!^{d_i}.
  const auto u = mcl::u_vector(7);
  const Rational alt = -mcl::delta_by_compositions(std::span<const Rational>(u), 7);
  compare(report, "alternating-expansion", "alternating composition expansion",
          PiScaled(Rational(4096, 8191) * alt, 14), z14);
  return report;
}

}  // namespace trio::zeta
