#include "trio/hp/complex.hpp"

#include <algorithm>

#include "trio/errors.hpp"

namespace trio::hp {

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  const Precision p = std::min(re_.precision(), im_.precision());
  if (re_.precision() != p) re_ = re_.with_precision(p);
  if (im_.precision() != p) im_ = im_.with_precision(p);
}

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real re = re_ * rhs.re_ - im_ * rhs.im_;
  Real im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  const Real d = norm(rhs);
  Real re = (re_ * rhs.re_ + im_ * rhs.im_) / d;
  Real im = (im_ * rhs.re_ - re_ * rhs.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator*=(long rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator*=(const Rational& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex& Complex::operator/=(long rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

std::string Complex::to_string(int digits) const {
  return re_.to_string(digits) + "," + im_.to_string(digits);
}

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
  const Real m = exp(z.re());
  if (z.im().is_zero()) return {m, zero_like(m)};
  Real s(z.precision()), c(z.precision());
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
  return {m * c, m * s};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  const Real r = abs(z);
  Real a = sqrt(ldexp(r + z.re(), -1));
  Real b = sqrt(ldexp(r - z.re(), -1));
  if (z.im().sign() < 0) b = -b;
  return {std::move(a), std::move(b)};
}

Complex pow(const Complex& base, const Complex& exponent) {
  if (base.is_zero()) {
    if (exponent.re().sign() > 0) return zero_like(base);
    throw DomainError("hp::pow: zero base with non-positive exponent");
  }
  return exp(exponent * log(base));
}

Complex pow(const Complex& base, long exponent) {
  Complex result = one_like(base);
  Complex b = base;
  unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  while (e) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return exponent < 0 ? one_like(base) / result : result;
}

Complex pow_neg(long n, const Complex& s) {
  const Real ln = log(Real(n, s.precision()));
  return exp(-(s * ln));
}

bool close(const Complex& a, const Complex& b, long log2_tol) {
  const Real d = abs(a - b);
  if (!d.is_finite()) return false;
  return d.is_zero() || d.exponent2() <= log2_tol;
}

Complex parse_complex(std::string_view text, Precision p) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return Complex(Real::parse(text, p));
  return {Real::parse(text.substr(0, comma), p), Real::parse(text.substr(comma + 1), p)};
}

}  // namespace trio::hp
