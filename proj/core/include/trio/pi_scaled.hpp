#pragma once

#include <string>

#include "trio/rational.hpp"

namespace trio {

/// An exact value q * pi^m with rational q and integer m >= 0.
///
/// Zero is canonical (0 * pi^0) and acts as the additive identity for every
/// grade. Adding two nonzero values of different grades throws DomainError.
class PiScaled {
 public:
  PiScaled() = default;
  PiScaled(Rational coeff, int pi_pow = 0);  // NOLINT(implicit)

  const Rational& coeff() const noexcept { return coeff_; }
  int pi_pow() const noexcept { return pi_pow_; }
  bool is_zero() const noexcept { return coeff_.is_zero(); }

  PiScaled& operator+=(const PiScaled& rhs);
  PiScaled& operator-=(const PiScaled& rhs);
  PiScaled& operator*=(const PiScaled& rhs);
  PiScaled& operator*=(const Rational& rhs);
  PiScaled& operator/=(const Rational& rhs);

  friend PiScaled operator+(PiScaled a, const PiScaled& b) { return a += b; }
  friend PiScaled operator-(PiScaled a, const PiScaled& b) { return a -= b; }
  friend PiScaled operator*(PiScaled a, const PiScaled& b) { return a *= b; }
  friend PiScaled operator*(PiScaled a, const Rational& b) { return a *= b; }
  friend PiScaled operator*(const Rational& b, PiScaled a) { return a *= b; }
  friend PiScaled operator/(PiScaled a, const Rational& b) { return a /= b; }
  PiScaled operator-() const { return PiScaled(-coeff_, pi_pow_); }

  friend bool operator==(const PiScaled&, const PiScaled&) = default;

  /// {"coeff": "p/q", "pi_pow": m}
  std::string to_json() const;
  static PiScaled from_json(const std::string& text);

  /// Human-readable form such as "2/18243225*pi^14".
  std::string to_string() const;

 private:
  void normalize();

  Rational coeff_;
  int pi_pow_ = 0;
};

/// pi^m with unit coefficient.
inline PiScaled pi_power(int m) { return PiScaled(Rational(1), m); }

inline PiScaled one_like(const PiScaled&) { return PiScaled(Rational(1)); }
inline PiScaled zero_like(const PiScaled&) { return PiScaled(); }

}  // namespace trio
