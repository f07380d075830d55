#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "trio/rational.hpp"

namespace trio::hp {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;

/// RAII wrapper over an mpfr_t. Binary operations produce a result at the
/// smaller of the two operand precisions; scalar operands (long, Rational)
/// take the precision of the Real. Rounding is always to nearest.
class Real {
 public:
  Real() : Real(kDefaultPrecision) {}
  explicit Real(Precision p);
  Real(long value, Precision p);
  Real(double value, Precision p);
  Real(const Rational& value, Precision p);
  Real(int value) : Real(static_cast<long>(value), kDefaultPrecision) {}  // NOLINT(implicit)

  /// Decimal or "p/q" text.
  static Real parse(std::string_view text, Precision p);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

  /// Copy rounded (or widened) to precision p.
  Real with_precision(Precision p) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent2() const;

  /// Scientific decimal string with the given number of significant digits
  /// (0 picks enough digits for the precision).
  std::string to_string(int digits = 0) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real& operator*=(const Rational& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(Real a, long b);
  friend Real operator-(Real a, long b);
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator*(long b, Real a) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator*(Real a, const Rational& b) { return a *= b; }
  friend Real operator*(const Rational& b, Real a) { return a *= b; }
  friend Real operator+(Real a, const Rational& b);
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);

/// x * 2^e, exact.
Real ldexp(const Real& x, long e);

/// 2^e at precision p.
Real pow2(long e, Precision p);

inline Real one_like(const Real& x) { return Real(1L, x.precision()); }
inline Real zero_like(const Real& x) { return Real(0L, x.precision()); }

/// |a - b| <= 2^log2_tol, with NaN never close.
bool close(const Real& a, const Real& b, long log2_tol);

/// log2 |x| as a double; -infinity for zero.
double log2_abs(const Real& x);

/// Decimal digits carried by P bits: ceil(P log10 2).
int decimal_digits(Precision p);

}  // namespace trio::hp
