#pragma once

#include <span>
#include <string>
#include <vector>

#include "trio/rational.hpp"

namespace trio {

/// Dense polynomial with exact rational coefficients; coeffs()[k] multiplies
/// z^k. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of z^k, zero past the degree.
  Rational coeff(std::size_t k) const;

  /// True when only even powers of z carry nonzero coefficients.
  bool is_even() const;

  Rational eval(const Rational& z) const;
  GaussRational eval(const GaussRational& z) const;

  /// p(c z).
  RatPoly scaled_argument(const Rational& c) const;

  /// z^n p(1/z); requires n >= degree().
  RatPoly reciprocal(long n) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& c, const RatPoly& p);
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Exact Horner evaluation at a rational point.
inline Rational poly_eval(const RatPoly& p, const Rational& z) { return p.eval(z); }

/// Exact Horner evaluation at a Gaussian rational point.
inline GaussRational poly_eval_gauss(const RatPoly& p, const GaussRational& z) { return p.eval(z); }

}  // namespace trio
