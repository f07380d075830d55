#include "trio/poly.hpp"

#include <algorithm>

#include "trio/errors.hpp"

namespace trio {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

bool RatPoly::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

Rational RatPoly::eval(const Rational& z) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

GaussRational RatPoly::eval(const GaussRational& z) const {
  GaussRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + GaussRational{*it, 0};
  return acc;
}

RatPoly RatPoly::scaled_argument(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  Rational power(1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    out[k] = coeffs_[k] * power;
    power *= c;
  }
  return RatPoly(std::move(out));
}

RatPoly RatPoly::reciprocal(long n) const {
  if (n < degree()) throw DomainError("RatPoly::reciprocal: n below degree");
  if (is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[static_cast<std::size_t>(n) - k] = coeffs_[k];
  return RatPoly(std::move(out));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
  return RatPoly(std::move(out));
}

RatPoly operator*(const Rational& c, const RatPoly& p) {
  std::vector<Rational> out(p.coeffs_);
  for (auto& x : out) x *= c;
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k > 0) out += "*z^" + std::to_string(k);
  }
  return out;
}

}  // namespace trio
