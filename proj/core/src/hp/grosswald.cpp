#include "trio/hp/grosswald.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "trio/errors.hpp"
#include "trio/hp/special.hpp"
#include "trio/ramanujan.hpp"

namespace trio::hp {

namespace {

// Smallest n with n log2|q| - 2 log2(1 - |q|) < -(P + 20).
long cutoff(double log2_q, Precision p) {
  const double q = std::exp2(log2_q);
  const double slack = -2.0 * std::log2(1.0 - q);
  const double n = (-(static_cast<double>(p) + 20.0) - slack) / log2_q;
  return std::max<long>(1, static_cast<long>(std::ceil(n)));
}

}  // namespace

GrosswaldValue grosswald_F(long s, const Complex& z, Precision p, long terms_override) {
  if (z.im().sign() <= 0) throw DomainError("grosswald_F: z must lie in the upper half-plane");
  const Precision w = p + 32;
  const Complex zw = z.with_precision(w);
  const Real two_pi = ldexp(pi(w), 1);
  const Complex q = exp(Complex(-(two_pi * zw.im()), two_pi * zw.re()));
  const double log2_q = -(two_pi * zw.im()).to_double() / std::log(2.0);
  const long n_max = terms_override > 0 ? terms_override : cutoff(log2_q, p);

  Complex sum = zero_like(q);
  Complex qn = one_like(q);
  for (long n = 1; n <= n_max; ++n) {
    qn *= q;
    const Complex term = qn / (one_like(qn) - qn);
    sum += term * pow(Real(n, w), -s);
  }
  return {s, z, sum.with_precision(p), n_max};
}

Real lambert_sum(long m, const Real& c, Precision p) {
  if (c.sign() <= 0) throw DomainError("lambert_sum: rate must be positive");
  const Precision w = p + 32;
  const Real cw = c.with_precision(w);
  const double log2_q = -cw.to_double() / std::log(2.0);
  const long n_max = cutoff(log2_q, p);
  Real sum(0L, w);
  for (long n = 1; n <= n_max; ++n) sum += pow(Real(n, w), -m) / expm1(cw * n);
  return sum.with_precision(p);
}

namespace {

Complex eval(const RatPoly& poly, const Complex& z) {
  const auto c = poly.coeffs();
  Complex v(0, 0, z.precision());
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + Complex(Real(c[k], z.precision()));
  return v;
}

Complex imag(const Rational& y, Precision w) { return {Real(0L, w), Real(y, w)}; }

class Checker {
 public:
  Checker(Report& report, long log2_tol) : report_(report), tol_(log2_tol) {}

  void operator()(std::string id, std::string ref, const Complex& lhs, const Complex& rhs) {
    const Real d = abs(lhs - rhs);
    const bool ok = d.is_zero() || d.exponent2() <= tol_;
    report_.check(std::move(id), std::move(ref), ok, lhs.to_string(40), rhs.to_string(40), d.to_string(6));
  }

 private:
  Report& report_;
  long tol_;
};

}  // namespace

Report verify_grosswald_identities(unsigned s, Precision p) {
  if (s == 0) throw DomainError("verify_grosswald_identities: s must be >= 1");
  if (p < 192) throw PrecisionError("verify_grosswald_identities: precision below 192 bits", 192);
  Report report("hp.grosswald.s" + std::to_string(s));
  const Precision w = p + 64;
  const long m = 2 * static_cast<long>(s) + 1;
  const long two_s = 2 * static_cast<long>(s);
  Checker check(report, 32 - static_cast<long>(p));

  const Real zeta_m = zeta(Real(m, w), w);
  const Real eta_m = zeta_m * (Rational(1) - Rational::pow2(-two_s));
  const Real two_pi = ldexp(pi(w), 1);
  const Complex two_pi_i(Real(0L, w), two_pi);
  const RatPoly r_odd = ramanujan::r_odd(s).poly;
  const RatPoly r_even = ramanujan::r_even(s).poly;
  const auto F = [&](const Complex& z) { return grosswald_F(m, z, w).value; };
  const Complex one = Complex(1, 0, w);
  const Complex half_zeta(ldexp(zeta_m, -1));
  const Rational inv_4s = Rational::pow2(-two_s);

  const std::pair<Rational, const char*> points[] = {{Rational(1), "z=i"}, {Rational(1, 2), "z=i/2"}, {Rational(2), "z=2i"}};
  for (const auto& [y, at] : points) {
    const Complex z = imag(y, w);
    const Complex z2s = pow(z, two_s);
    const Complex transform = F(z) - z2s * F(-(one / z));
    const Complex rhs = half_zeta * (z2s - one) + pow(two_pi_i, m) / (z * 2L) * eval(r_odd, z);
    check(std::string("transform.") + at, "Grosswald transformation of F", transform, rhs);

    const Complex lhs_even = pow(two_pi_i, m) / (z * 8L) * eval(r_even, z);
    const Complex inner = z2s * Rational(1, 2) - one + Complex(Real(Rational::pow2(-two_s - 1), w));
    const Complex rhs_even = -(half_zeta * inner) + transform - F(z * 2L) * Rational::pow2(-two_s - 1) +
                             z2s * Rational(1, 2) * F(-(one / (z * 2L)));
    check(std::string("even-link.") + at, "transformation through the even-index polynomial", lhs_even, rhs_even);
  }

  const Complex half_i = imag(Rational(1, 2), w);
  const Complex unit_i = imag(Rational(1), w);
  const Complex two_i = imag(Rational(2), w);
  const Real scale = pow(two_pi, m) * Rational(1, 4);
  const Complex r_half = eval(r_even, half_i);
  const Complex r_unit = eval(r_even, unit_i);
  if (s % 2 == 0) {
    const Complex rhs = F(half_i) - F(two_i) * inv_4s + Complex(ldexp(eta_m, -1));
    check("special.half-i", "even s: value at i/2", r_half * scale, rhs);
    check("special.unit-i", "even s: value at i", r_unit * scale, rhs);
    check("special.i-equals-half-i", "even s: R_{2s}(i) = R_{2s}(i/2)", r_unit, r_half);
  } else {
    const Complex rhs27 = F(half_i) - F(unit_i) * inv_4s + F(two_i) * inv_4s + half_zeta;
    check("special.half-i", "odd s: value at i/2", -(r_half * scale), rhs27);
    const Complex rhs29 = -F(half_i) + F(unit_i) * 4L - F(two_i) * inv_4s +
                          Complex(ldexp(zeta_m * (Rational(3) - inv_4s), -1));
    check("special.unit-i", "odd s: value at i", -(r_unit * scale), rhs29);
  }

  // Transcendence dichotomy sums.
  const long e_minus = 4 * static_cast<long>(s) - 1;
  const long e_plus = 4 * static_cast<long>(s) + 1;
  const Real sum_minus = lambert_sum(e_minus, two_pi, w);
  report.check("sum.4s-1.positive", "sum n^{-(4s-1)}/(e^{2 pi n}-1) > 0", sum_minus.sign() > 0,
               sum_minus.to_string(30), "> 0");
  const Real sum_plus =
      lambert_sum(e_plus, pi(w), w) - lambert_sum(e_plus, ldexp(pi(w), 2), w) * Rational::pow2(-4 * static_cast<long>(s));
  report.check("sum.4s+1.positive", "sum n^{-(4s+1)}(1/(e^{pi n}-1) - 2^{-4s}/(e^{4 pi n}-1)) > 0",
               sum_plus.sign() > 0, sum_plus.to_string(30), "> 0");

  // The same sum plus eta(4s+1)/2 is a rational multiple of pi^{4s+1}.
  const Real zeta_plus = zeta(Real(e_plus, w), w);
  const Real eta_plus = zeta_plus * (Rational(1) - Rational::pow2(-4 * static_cast<long>(s)));
  const Complex r_double = eval(ramanujan::r_even(2 * s).poly, half_i);
  check("sum.4s+1.polynomial", "positive sum equals a rational multiple of pi^{4s+1}",
        r_double * (pow(two_pi, e_plus) * Rational(1, 4)), Complex(sum_plus + ldexp(eta_plus, -1)));
  return report;
}

Report verify_ramanujan_identity(unsigned s, const Real& alpha, Precision p) {
  if (s == 0) throw DomainError("verify_ramanujan_identity: s must be >= 1");
  if (alpha.sign() <= 0) throw DomainError("verify_ramanujan_identity: alpha must be positive");
  Report report("hp.ramanujan-identity.s" + std::to_string(s));
  const Precision w = p + 64;
  const long m = 2 * static_cast<long>(s) + 1;
  const long ss = static_cast<long>(s);
  const Real a = alpha.with_precision(w);
  const Real pw = pi(w);
  const Real b = pw * pw / a;
  const Real half_zeta = ldexp(zeta(Real(m, w), w), -1);

  const Real lhs = pow(a, -ss) * (half_zeta + lambert_sum(m, ldexp(a, 1), w));
  const Real bracket = half_zeta + lambert_sum(m, ldexp(b, 1), w);
  const RatPoly r = ramanujan::r_odd(s).poly;
  Real poly(0L, w);
  for (long k = 0; k <= ss + 1; ++k) {
    Real term = pow(a, ss + 1 - k) * pow(b, k) * r.coeff(2 * static_cast<std::size_t>(k));
    poly += k % 2 ? -term : term;
  }
  poly = ldexp(poly, 2 * ss);
  const Real rhs = pow(-b, -ss) * bracket - poly;
  const Real uncorrected = pow(b, -ss) * bracket - poly;

  const long tol = 40 - static_cast<long>(p);
  const Real d = abs(lhs - rhs);
  report.check("identity", "odd-zeta identity with (-beta)^{-s}", d.is_zero() || d.exponent2() <= tol,
               lhs.to_string(40), rhs.to_string(40), d.to_string(6));
  report.observe("identity.uncorrected", "odd-zeta identity with beta^{-s}", lhs.to_string(40),
                 uncorrected.to_string(40), abs(lhs - uncorrected).to_string(6));
  return report;
}

}  // namespace trio::hp
