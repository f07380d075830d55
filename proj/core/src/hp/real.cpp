#include "trio/hp/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "trio/errors.hpp"

namespace trio::hp {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

Precision min_prec(const Real& a, const Real& b) { return std::min(a.precision(), b.precision()); }

void check_precision(Precision p) {
  if (p < MPFR_PREC_MIN || p > MPFR_PREC_MAX) throw DomainError("hp::Real: invalid precision");
}

}  // namespace

Real::Real(Precision p) {
  check_precision(p);
  mpfr_init2(value_, p);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision p) : Real(p) { mpfr_set_si(value_, value, kRnd); }

Real::Real(double value, Precision p) : Real(p) { mpfr_set_d(value_, value, kRnd); }

Real::Real(const Rational& value, Precision p) : Real(p) { mpfr_set_q(value_, value.get().get_mpq_t(), kRnd); }

Real Real::parse(std::string_view text, Precision p) {
  if (text.find('/') != std::string_view::npos) return Real(Rational::parse(text), p);
  Real r(p);
  std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRnd);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw DomainError("hp::Real: malformed number \"" + s + "\"");
  }
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRnd);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(Precision p) const {
  Real r(p);
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

long Real::exponent2() const {
  if (!mpfr_regular_p(value_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(value_);
}

std::string Real::to_string(int digits) const {
  if (digits <= 0) digits = decimal_digits(precision());
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRnd);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRnd);
  return *this;
}

Real& Real::operator*=(const Rational& rhs) {
  mpfr_mul_q(value_, value_, rhs.get().get_mpq_t(), kRnd);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(min_prec(a, b));
  mpfr_add(r.value_, a.value_, b.value_, kRnd);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(min_prec(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, kRnd);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(min_prec(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, kRnd);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(min_prec(a, b));
  mpfr_div(r.value_, a.value_, b.value_, kRnd);
  return r;
}

Real operator+(Real a, long b) {
  mpfr_add_si(a.value_, a.value_, b, kRnd);
  return a;
}

Real operator-(Real a, long b) {
  mpfr_sub_si(a.value_, a.value_, b, kRnd);
  return a;
}

Real operator+(Real a, const Rational& b) {
  mpfr_add_q(a.value_, a.value_, b.get().get_mpq_t(), kRnd);
  return a;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.value_, value_, kRnd);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define TRIO_HP_UNARY(name, fn)          \
  Real name(const Real& x) {             \
    Real r(x.precision());               \
    fn(r.get(), x.get(), kRnd);          \
    return r;                            \
  }

TRIO_HP_UNARY(abs, mpfr_abs)
TRIO_HP_UNARY(sqrt, mpfr_sqrt)
TRIO_HP_UNARY(exp, mpfr_exp)
TRIO_HP_UNARY(expm1, mpfr_expm1)
TRIO_HP_UNARY(log, mpfr_log)
TRIO_HP_UNARY(log1p, mpfr_log1p)
TRIO_HP_UNARY(sin, mpfr_sin)
TRIO_HP_UNARY(cos, mpfr_cos)

#undef TRIO_HP_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(min_prec(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

Real pow(const Real& base, const Real& exponent) {
  Real r(min_prec(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), kRnd);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, kRnd);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

Real pow2(long e, Precision p) { return ldexp(Real(1L, p), e); }

bool close(const Real& a, const Real& b, long log2_tol) {
  const Real d = abs(a - b);
  if (!d.is_finite()) return false;
  return d.is_zero() || d.exponent2() <= log2_tol;
}

double log2_abs(const Real& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.get(), kRnd);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

int decimal_digits(Precision p) {
  return static_cast<int>(std::ceil(static_cast<double>(p) * std::log10(2.0)));
}

}  // namespace trio::hp
