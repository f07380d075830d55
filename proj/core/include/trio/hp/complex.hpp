#pragma once

#include <string>

#include "trio/hp/real.hpp"

namespace trio::hp {

/// High-precision complex number; both parts share one precision.
class Complex {
 public:
  Complex() = default;
  explicit Complex(Precision p) : re_(p), im_(p) {}
  Complex(Real re, Real im);
  Complex(const Real& re) : Complex(re, zero_like(re)) {}  // NOLINT(implicit)
  Complex(long re, long im, Precision p) : re_(re, p), im_(im, p) {}

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  Precision precision() const noexcept { return re_.precision(); }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  Complex with_precision(Precision p) const { return {re_.with_precision(p), im_.with_precision(p)}; }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator*=(long rhs);
  Complex& operator*=(const Rational& rhs);
  Complex& operator/=(long rhs);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator*(Complex a, long b) { return a *= b; }
  friend Complex operator*(long b, Complex a) { return a *= b; }
  friend Complex operator*(Complex a, const Rational& b) { return a *= b; }
  friend Complex operator/(Complex a, long b) { return a /= b; }
  friend Complex operator+(Complex a, long b) { return a += Complex(b, 0, a.precision()); }
  friend Complex operator-(Complex a, long b) { return a -= Complex(b, 0, a.precision()); }
  friend Complex operator+(Complex a, const Real& b) { return a += Complex(b); }
  friend Complex operator-(Complex a, const Real& b) { return a -= Complex(b); }
  Complex operator-() const { return {-re_, -im_}; }

  /// "re,im" in scientific notation.
  std::string to_string(int digits = 0) const;

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
/// base^exponent = exp(exponent log base), principal branch.
Complex pow(const Complex& base, const Complex& exponent);
Complex pow(const Complex& base, long exponent);
/// n^{-s} for a positive integer n.
Complex pow_neg(long n, const Complex& s);

/// i at precision p.
inline Complex imag_unit(Precision p) { return Complex(0, 1, p); }

inline Complex one_like(const Complex& z) { return Complex(1, 0, z.precision()); }
inline Complex zero_like(const Complex& z) { return Complex(0, 0, z.precision()); }

/// |a - b| < 2^log2_tol.
bool close(const Complex& a, const Complex& b, long log2_tol);

/// Parses "re" or "re,im".
Complex parse_complex(std::string_view text, Precision p);

}  // namespace trio::hp
