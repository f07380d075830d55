#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace trio {

/// Exact rational number backed by GMP.
///
/// Values are kept in lowest terms with a strictly positive denominator;
/// zero is always 0/1. Every constructor and operator re-establishes this,
/// so equality is plain structural comparison.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  Rational(const mpz_class& integer) : value_(integer) {}  // NOLINT(implicit)

  /// Throws DomainError when `den` is zero.
  Rational(const mpz_class& num, const mpz_class& den);

  explicit Rational(const mpq_class& q);

  /// Parses "p/q", "-p/q" or a bare integer "p".
  static Rational parse(std::string_view text);

  /// 2^e for any signed exponent.
  static Rational pow2(long e);

  /// Serializes as "p/q" (integers keep the "/1" suffix).
  std::string to_string() const;

  const mpq_class& get() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }

  /// Throws DomainError when *this is zero.
  Rational inverse() const;
  Rational abs() const;
  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Integer power with a signed exponent; zero to a negative power throws.
Rational pow(const Rational& base, long exponent);

/// n! as an exact integer.
mpz_class factorial(unsigned long n);

/// Binomial coefficient C(n, k), zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }

/// Exact Gaussian rational a + b i.
struct GaussRational {
  Rational re;
  Rational im;

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRational&, const GaussRational&) = default;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

}  // namespace trio
