#include "trio/series.hpp"

#include "trio/errors.hpp"

namespace trio {

RatSeries::RatSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

RatSeries::RatSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("RatSeries: needs at least one coefficient");
}

RatSeries RatSeries::unit(std::size_t order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  return RatSeries(std::move(c));
}

RatSeries series_mul(const RatSeries& a, const RatSeries& b) {
  if (a.order() != b.order()) throw DomainError("series_mul: mismatched truncation orders");
  const std::size_t n = a.order();
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return RatSeries(std::move(out));
}

RatSeries series_inverse(const RatSeries& a) {
  if (a[0].is_zero()) throw DomainError("series_inverse: constant term is zero");
  const std::size_t n = a.order();
  const Rational inv0 = a[0].inverse();
  std::vector<Rational> b(n + 1);
  b[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!a[j].is_zero()) acc += a[j] * b[k - j];
    }
    b[k] = -acc * inv0;
  }
  return RatSeries(std::move(b));
}

}  // namespace trio
