#include "trio/rational.hpp"

#include <string>

#include "trio/errors.hpp"

namespace trio {

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) {
  if (value_.get_den() == 0) throw DomainError("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("Rational: empty string");
  // mpq_set_str accepts a leading '+' and embedded whitespace; we do not.
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw DomainError("Rational: malformed \"" + s + "\"");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("Rational: malformed \"" + s + "\"");
  if (q.get_den() == 0) throw DomainError("Rational: zero denominator in \"" + s + "\"");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::pow2(long e) {
  mpz_class p = 1;
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), mag);
  return e >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("Rational: inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpz_class num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), e);
  return Rational(num, den);
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace trio
