#include "trio/pseudochar.hpp"

#include <array>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>

#include "trio/errors.hpp"
#include "trio/hp/special.hpp"
#include "trio/zetafam.hpp"

namespace trio::pseudo {

namespace {

using hp::Precision;
using hp::Real;

Rational inv_factorial(unsigned long n) { return Rational(mpz_class(1), factorial(n)); }

Real value_of(const PiScaled& v, Precision p) { return Real(v.coeff(), p) * pow(hp::pi(p), v.pi_pow()); }

Real floor_of(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

std::string label(const Real& x) {
  std::ostringstream out;
  out << std::setprecision(6) << x.to_double();
  return out.str();
}

std::string bits(long e) { return "2^" + std::to_string(e); }

bool below(const Real& d, long log2_tol) { return d.is_zero() || d.exponent2() <= log2_tol; }

}  // namespace

Kind parse_kind(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Kind>, 6> kNames = {
      {{"p", Kind::p}, {"q", Kind::q}, {"z", Kind::z}, {"t", Kind::t}, {"e", Kind::e}, {"f", Kind::f}}};
  for (const auto& [n, k] : kNames) {
    if (n == name) return k;
  }
  throw DomainError("unknown pseudo-characteristic kind: " + std::string(name));
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::p: return "p";
    case Kind::q: return "q";
    case Kind::z: return "z";
    case Kind::t: return "t";
    case Kind::e: return "e";
    case Kind::f: return "f";
  }
  return "?";
}

PseudoPoly pseudo_poly(Kind kind, unsigned s) {
  if (s == 0) throw DomainError("pseudo_poly: s must be >= 1");
  PseudoPoly out{kind, s, {}};
  const bool q = kind == Kind::q;
  for (unsigned k = 0; k < s; ++k) {
    const PiScaled c(inv_factorial(2 * k + 1), 2 * static_cast<int>(k));
    if (q) {
      out.coeffs.push_back(k % 2 ? -c : c);
    } else {
      out.coeffs.push_back(k == 0 ? PiScaled() : (k % 2 ? c : -c));
    }
  }
  const Rational sign = s % 2 ? Rational(1) : Rational(-1);
  const int two_s = 2 * static_cast<int>(s);
  switch (kind) {
    case Kind::p:
    case Kind::q: break;
    case Kind::z: out.coeffs[0] = PiScaled(sign * Rational(s) * inv_factorial(2 * s + 1), two_s); break;
    case Kind::t: out.coeffs[0] = PiScaled(sign * inv_factorial(2 * s) / Rational(4), two_s); break;
    case Kind::e: out.coeffs[0] = PiScaled(sign * inv_factorial(2 * s + 1) / Rational(2), two_s); break;
    case Kind::f:
      out.coeffs[0] = PiScaled(sign * Rational(2 * s - 1) * inv_factorial(2 * s + 1) / Rational(4), two_s);
      break;
  }
  return out;
}

Real eval_pseudo(Kind kind, unsigned s, const Real& x, Precision p) {
  if (p < 64) throw PrecisionError("eval_pseudo: precision below 64 bits", 64);
  const PseudoPoly poly = pseudo_poly(kind, s);
  const Precision w = p + 32;
  const Real px = hp::pi(w) * x.with_precision(w);
  const Real y = px * px;
  // sum_{k>=1} r_k (pi x)^{2k} with r_k the rational part of coeffs[k].
  Real acc(0L, w);
  for (std::size_t k = poly.coeffs.size(); k-- > 1;) acc = (acc + Real(poly.coeffs[k].coeff(), w)) * y;
  return (acc + value_of(poly.coeffs[0], w)).with_precision(p);
}

Report verify_definitions(unsigned s_max) {
  Report report("pseudo.definitions");
  for (unsigned s = 1; s <= s_max; ++s) {
    const PseudoPoly p = pseudo_poly(Kind::p, s);
    const PseudoPoly q = pseudo_poly(Kind::q, s);
    bool sum_is_one = p.coeffs.size() == q.coeffs.size();
    for (std::size_t k = 0; sum_is_one && k < p.coeffs.size(); ++k) {
      sum_is_one = p.coeffs[k] + q.coeffs[k] == (k == 0 ? PiScaled(Rational(1)) : PiScaled());
    }
    const std::string id = "s" + std::to_string(s);
    report.check(id + ".p-plus-q", "p_s + q_s = 1", sum_is_one, "coefficientwise", "1");
    bool offsets = true;
    for (Kind kind : {Kind::z, Kind::t, Kind::e, Kind::f}) {
      const PseudoPoly v = pseudo_poly(kind, s);
      for (std::size_t k = 1; k < v.coeffs.size(); ++k) offsets = offsets && v.coeffs[k] == p.coeffs[k];
      offsets = offsets && !v.coeffs[0].is_zero() && v.coeffs[0].pi_pow() == 2 * static_cast<int>(s);
    }
    report.check(id + ".offsets", "z, t, e, f differ from p_s by a multiple of pi^{2s}", offsets, "checked", "");
  }
  return report;
}

Precision inequality_required_precision(unsigned s_max) { return 8 * static_cast<Precision>(s_max) + 64; }

namespace {

enum class Family { zeta, theta, eta, phi };
enum class Form { direct, inverse };

struct Bound {
  const char* name;
  const char* ref;
  Kind kind;
  Family family;
  Form form;
  unsigned threshold;
  bool proven;
};

constexpr Bound kBounds[] = {
    {"zeta", "zeta(k) - 3{zeta(k)}^2 <= z_s(zeta(k)) <= zeta(k)", Kind::z, Family::zeta, Form::direct, 17, true},
    {"theta", "theta(k) - 3{theta(k)}^2 <= t_s(theta(k)) <= theta(k)", Kind::t, Family::theta, Form::direct, 38,
     true},
    {"inv-zeta", "1/zeta(k) - {zeta(k)}^3 <= 1 + q_s(zeta(k)) <= 1/zeta(k) + 11{zeta(k)}^3", Kind::q, Family::zeta,
     Form::inverse, 34, true},
    {"inv-theta", "1/theta(k) - {theta(k)}^3 <= 1 + q_s(theta(k)) <= 1/theta(k) + 11{theta(k)}^3", Kind::q,
     Family::theta, Form::inverse, 114, true},
    {"eta", "eta(k) - 3{eta(k)}^2 <= e_s(eta(k)) <= eta(k)", Kind::e, Family::eta, Form::direct, 17, false},
    {"phi", "phi(k) - 3{phi(k)}^2 <= f_s(phi(k)) <= phi(k)", Kind::f, Family::phi, Form::direct, 17, false},
    {"inv-eta", "1/eta(k) - {eta(k)}^3 <= 1 + q_s(eta(k)) <= 1/eta(k) + 11{eta(k)}^3", Kind::q, Family::eta,
     Form::inverse, 34, false},
};

class FamilyTable {
 public:
  explicit FamilyTable(Precision w) : w_(w) {}

  const Real& zeta(long k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    Real v = k % 2 == 0 ? value_of(trio::zeta::zeta_even(static_cast<unsigned>(k / 2)), w_) : hp::zeta(Real(k, w_), w_);
    return cache_.emplace(k, std::move(v)).first->second;
  }

  Real value(Family f, long k) {
    const Real& z = zeta(k);
    switch (f) {
      case Family::zeta: return z;
      case Family::theta: return z * (Rational(1) - Rational::pow2(-k));
      case Family::eta: return z * (Rational(1) - Rational::pow2(1 - k));
      case Family::phi: return z * Rational::pow2(-k);
    }
    return z;
  }

  Precision precision() const { return w_; }

 private:
  Precision w_;
  std::map<long, Real> cache_;
};

struct Outcome {
  bool holds = false;
  Real lower, value, upper;
};

Outcome evaluate(const Bound& b, unsigned s, long k, FamilyTable& table) {
  const Precision w = table.precision();
  const Real x = table.value(b.family, k);
  const Real frac = x - 1L;
  Outcome o;
  if (b.form == Form::direct) {
    o.value = eval_pseudo(b.kind, s, x, w);
    o.lower = x - frac * frac * 3L;
    o.upper = x;
  } else {
    o.value = eval_pseudo(b.kind, s, x, w) + 1L;
    const Real inv = Real(1L, w) / x;
    const Real cube = frac * frac * frac;
    o.lower = inv - cube;
    o.upper = inv + cube * 11L;
  }
  o.holds = o.lower <= o.value && o.value <= o.upper;
  return o;
}

bool holds_both(const Bound& b, unsigned s, FamilyTable& table) {
  const long two_s = 2 * static_cast<long>(s);
  return evaluate(b, s, two_s, table).holds && evaluate(b, s, two_s - 1, table).holds;
}

// Distance of the value to the nearer end, in units of {x}^3 for the
// inverse bounds and {x}^2 for the direct ones.
std::string margin(const Bound& b, const Outcome& o, const Real& frac) {
  const Real lo = o.value - o.lower;
  const Real hi = o.upper - o.value;
  const Real unit = b.form == Form::direct ? frac * frac : abs(frac * frac * frac);
  const Real m = std::min(lo, hi) / unit;
  return "margin " + m.to_string(6) + " x {x}^" + (b.form == Form::direct ? "2" : "3");
}

}  // namespace

Report verify_inequalities(unsigned s_min, unsigned s_max, Precision p) {
  if (s_min < 2 || s_max < s_min) throw DomainError("verify_inequalities: need 2 <= s_min <= s_max");
  const Precision need = inequality_required_precision(s_max);
  if (p < need) {
    throw PrecisionError("verify_inequalities: s_max = " + std::to_string(s_max) + " needs P >= " + std::to_string(need),
                         need);
  }
  Report report("pseudo.inequalities");
  FamilyTable table(p + 2 * static_cast<Precision>(s_max));

  for (unsigned s = s_min; s <= s_max; ++s) {
    for (const Bound& b : kBounds) {
      if (s < b.threshold) continue;
      for (long k : {2 * static_cast<long>(s), 2 * static_cast<long>(s) - 1}) {
        const Outcome o = evaluate(b, s, k, table);
        const std::string id = "s" + std::to_string(s) + ".k" + std::to_string(k) + "." + b.name;
        const std::string range = "[" + o.lower.to_string(25) + ", " + o.upper.to_string(25) + "]";
        const Real frac = table.value(b.family, k) - 1L;
        if (b.proven) {
          report.check(id, b.ref, o.holds, o.value.to_string(25), range, margin(b, o, frac));
        } else {
          report.add({id, b.ref, Status::extrapolated, o.value.to_string(25), range,
                      (o.holds ? "holds, " : "does not hold, ") + margin(b, o, frac)});
        }
      }
    }
  }

  for (const Bound& b : kBounds) {
    if (!b.proven || b.threshold > s_max) continue;
    unsigned onset = b.threshold;
    while (onset > 2 && holds_both(b, onset - 1, table)) --onset;
    report.observe(std::string("onset.") + b.name, "smallest s from which the bound holds up to the threshold",
                   "s >= " + std::to_string(onset), "threshold " + std::to_string(b.threshold));
  }
  return report;
}

Report verify_factorial_decay(Precision p) {
  if (p < 1200) throw PrecisionError("verify_factorial_decay: precision below 1200 bits", 1200);
  Report report("pseudo.decay");
  FamilyTable table(p);
  const Real pi = hp::pi(p);
  for (unsigned i = 0; i < 5; ++i) {
    const unsigned t = kDecayThresholds[i];
    for (unsigned s = t; s <= t + 50; ++s) {
      const long sl = static_cast<long>(s);
      Real F = pow(pi, sl) * inv_factorial(s);
      if (i > 0) {
        const Family fam = i % 2 ? Family::zeta : Family::theta;
        const Real frac = table.value(fam, sl) - 1L;
        F = F / pow(frac, i <= 2 ? 2 : 3);
      }
      for (unsigned k : {1u, 2u}) {
        if (s < k * t) continue;
        const long e = static_cast<long>(s - t);
        const Real scaled = F * pow(Real(2L * k, p), e);
        const std::string id =
            "F" + std::to_string(i) + ".s" + std::to_string(s) + ".k" + std::to_string(k);
        report.check(id, "F_i(s) <= (2k)^{-(s - t_i)}", scaled <= 1L, F.to_string(12),
                     "(" + std::to_string(2 * k) + ")^-" + std::to_string(e), "ratio " + scaled.to_string(6));
      }
    }
  }
  return report;
}

std::vector<Real> default_sine_grid(Precision p) {
  std::vector<Real> out;
  for (const char* x : {"0.25", "0.5", "1", "1.37", "1.5", "2", "2.75", "3", "3.5", "3.9"}) {
    out.push_back(Real::parse(x, p));
  }
  return out;
}

Report verify_sine_form(unsigned s_max, const std::vector<Real>& x_grid, Precision p) {
  if (s_max == 0 || s_max > 40) throw DomainError("verify_sine_form: s_max must be in 1..40");
  if (p < 64) throw PrecisionError("verify_sine_form: precision below 64 bits", 64);
  Report report("pseudo.sine-form");
  const Precision w = p + 64;
  const long tol = 32 - static_cast<long>(p);
  const Real pi = hp::pi(w);
  for (const Real& x0 : x_grid) {
    if (x0.sign() <= 0 || !(x0 < 4L)) throw DomainError("verify_sine_form: grid point outside (0, 4)");
    const Real x = x0.with_precision(w);
    const Real px = pi * x;
    const Real y = px * px;
    const Real n = floor_of(x);
    const Real sine = sin(pi * (x - n)) / px;
    const Real signed_sine = static_cast<long>(n.to_double()) % 2 ? -sine : sine;
    const Real stop = hp::pow2(-static_cast<long>(w) - 16, w);

    Real worst_p(0L, w), worst_q(0L, w), uncorrected_p(0L, w), uncorrected_q(0L, w);
    std::vector<Real> tails;
    for (unsigned s = 1; s <= s_max; ++s) {
      // tail = sum_{k>=s} (-1)^k (pi x)^{2k} / (2k+1)!
      Real term = pow(px, 2L * s) * inv_factorial(2 * s + 1);
      Real tail(0L, w);
      for (unsigned k = s; term > stop || k < s + 4; ++k) {
        tail += k % 2 ? -term : term;
        term = term * y / Real(static_cast<long>((2 * k + 2) * (2 * k + 3)), w);
      }
      const Real ps = eval_pseudo(Kind::p, s, x, w);
      const Real qs = eval_pseudo(Kind::q, s, x, w);
      worst_p = std::max(worst_p, abs(ps - (Real(1L, w) - signed_sine + tail)));
      worst_q = std::max(worst_q, abs(qs - (signed_sine - tail)));
      uncorrected_p = std::max(uncorrected_p, abs(ps - (Real(1L, w) - signed_sine - tail)));
      uncorrected_q = std::max(uncorrected_q, abs(qs - (signed_sine + tail)));
      tails.push_back(abs(tail));
    }
    const std::string id = "x=" + label(x0);
    report.check(id + ".p", "p_s(x) = 1 - (-1)^[x] sin(pi{x})/(pi x) + sum_{k>=s} (-1)^k (pi x)^{2k}/(2k+1)!",
                 below(worst_p, tol), worst_p.to_string(6), bits(tol));
    report.check(id + ".q", "q_s(x) = (-1)^[x] sin(pi{x})/(pi x) - sum_{k>=s} (-1)^k (pi x)^{2k}/(2k+1)!",
                 below(worst_q, tol), worst_q.to_string(6), bits(tol));
    report.observe(id + ".p.uncorrected", "tail with (-1)^{k-1}", uncorrected_p.to_string(6), "max over s");
    report.observe(id + ".q.uncorrected", "tail with (-1)^{k-1}", uncorrected_q.to_string(6), "max over s");

    // Past the point where each tail term is at most half the previous one,
    // |tail_{s+1}| < |tail_s| is forced.
    unsigned start = 1;
    while (start < s_max && y * 2L > Real(static_cast<long>((2 * start + 2) * (2 * start + 3)), w)) ++start;
    bool shrinking = true;
    for (unsigned s = start; s < s_max; ++s) shrinking = shrinking && tails[s] < tails[s - 1];
    report.check(id + ".tail-shrinks", "|tail| decreasing in s", shrinking,
                 "s >= " + std::to_string(start), tails.back().to_string(6));
  }
  return report;
}

Report elementary_bounds(unsigned s_max, Precision p) {
  if (s_max < 2) throw DomainError("elementary_bounds: s_max must be >= 2");
  const Precision need = 2 * static_cast<Precision>(s_max) + 64;
  if (p < need) throw PrecisionError("elementary_bounds: precision below " + std::to_string(need), need);
  Report report("pseudo.bounds");
  FamilyTable table(p);
  for (unsigned s = 2; s <= s_max; ++s) {
    const long sl = static_cast<long>(s);
    const Rational two_s = Rational::pow2(sl);
    const auto R = [&](const Rational& q) { return Real(q, p); };
    const Real z = table.value(Family::zeta, sl);
    const Real eta = table.value(Family::eta, sl);
    const Real theta = table.value(Family::theta, sl);
    const Real phi = table.value(Family::phi, sl);
    const std::string id = "s" + std::to_string(s);

    const Real z_lo = R(Rational(1) + Rational(1) / (two_s - Rational(1)));
    const Real z_hi = R(Rational(1) + Rational(1) / (two_s / Rational(2) - Rational(1)));
    report.check(id + ".zeta", "1 + 1/(2^s-1) < zeta(s) < 1 + 1/(2^{s-1}-1)", z_lo < z && z < z_hi,
                 z.to_string(25), "(" + z_lo.to_string(12) + ", " + z_hi.to_string(12) + ")");

    const Real inv = Real(1L, p) / z;
    const Real i_lo = R(Rational(1) - Rational(2) / two_s);
    const Real i_hi = R(Rational(1) - Rational(1) / two_s);
    report.check(id + ".inv-zeta", "1 - 2^{1-s} < 1/zeta(s) < 1 - 2^{-s}", i_lo < inv && inv < i_hi,
                 inv.to_string(25), "(" + i_lo.to_string(12) + ", " + i_hi.to_string(12) + ")");

    const Real e_lo = R(Rational(1) - Rational(1) / (two_s - Rational(1)));
    const Real t_hi = R(Rational(1) + Rational(1) / (two_s - Rational(2)));
    report.check(id + ".eta-theta", "1 - 1/(2^s-1) < eta < 1 < theta < 1 + 1/(2^s-2)",
                 e_lo < eta && eta < 1L && theta > 1L && theta < t_hi,
                 eta.to_string(20) + " / " + theta.to_string(20), "");

    const Real a = eta * R(two_s - Rational(1));
    const Real b = theta * R(two_s - Rational(2));
    const Real lo = R(two_s - Rational(2)), hi = R(two_s - Rational(1));
    report.check(id + ".integer", "2^s-2 < (2^s-1) eta, (2^s-2) theta < 2^s-1",
                 lo < a && a < hi && lo < b && b < hi, a.to_string(25) + " / " + b.to_string(25), "");
    report.check(id + ".floor", "floor((2^s-1) eta) = floor((2^s-2) theta) = 2^s-2",
                 floor_of(a) == lo && floor_of(b) == lo, floor_of(a).to_string(20), lo.to_string(20));

    const Real m = R(two_s - Rational(3));
    const Real zs = z * m, ps = phi * m;
    const bool zeta_ok = R(two_s) - z * 2L < zs && zs < R(two_s) - z;
    const bool phi_ok = Real(1L, p) - phi * 2L < ps && ps < Real(1L, p) - phi;
    report.check(id + ".interval", "2^s - 2 zeta < (2^s-3) zeta < 2^s - zeta, same shape for phi", zeta_ok && phi_ok,
                 zs.to_string(20) + " / " + ps.to_string(20), "");
  }
  return report;
}

}  // namespace trio::pseudo
