#pragma once

#include <span>
#include <vector>

#include "trio/rational.hpp"

namespace trio {

/// Power series truncated after x^order; always holds order + 1 coefficients.
class RatSeries {
 public:
  /// Pads or truncates `coeffs` to order + 1 entries.
  RatSeries(std::vector<Rational> coeffs, std::size_t order);

  /// Uses coeffs.size() - 1 as the order; `coeffs` must be non-empty.
  explicit RatSeries(std::vector<Rational> coeffs);

  static RatSeries unit(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }

  friend bool operator==(const RatSeries&, const RatSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Truncated Cauchy product; throws DomainError on mismatched orders.
RatSeries series_mul(const RatSeries& a, const RatSeries& b);

/// Multiplicative inverse to the same order; throws DomainError when the
/// constant term is zero.
RatSeries series_inverse(const RatSeries& a);

}  // namespace trio
