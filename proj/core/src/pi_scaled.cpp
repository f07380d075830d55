#include "trio/pi_scaled.hpp"

#include "json.hpp"

#include "trio/errors.hpp"

namespace trio {

PiScaled::PiScaled(Rational coeff, int pi_pow) : coeff_(std::move(coeff)), pi_pow_(pi_pow) {
  if (pi_pow < 0) throw DomainError("PiScaled: negative pi exponent");
  normalize();
}

void PiScaled::normalize() {
  if (coeff_.is_zero()) pi_pow_ = 0;
}

PiScaled& PiScaled::operator+=(const PiScaled& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (pi_pow_ != rhs.pi_pow_) {
    throw DomainError("PiScaled: adding pi^" + std::to_string(pi_pow_) + " and pi^" +
                      std::to_string(rhs.pi_pow_));
  }
  coeff_ += rhs.coeff_;
  normalize();
  return *this;
}

PiScaled& PiScaled::operator-=(const PiScaled& rhs) { return *this += -rhs; }

PiScaled& PiScaled::operator*=(const PiScaled& rhs) {
  coeff_ *= rhs.coeff_;
  pi_pow_ += rhs.pi_pow_;
  normalize();
  return *this;
}

PiScaled& PiScaled::operator*=(const Rational& rhs) {
  coeff_ *= rhs;
  normalize();
  return *this;
}

PiScaled& PiScaled::operator/=(const Rational& rhs) {
  coeff_ /= rhs;
  return *this;
}

std::string PiScaled::to_json() const {
  nlohmann::ordered_json j;
  j["coeff"] = coeff_.to_string();
  j["pi_pow"] = pi_pow_;
  return j.dump();
}

PiScaled PiScaled::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return PiScaled(Rational::parse(j.at("coeff").get<std::string>()), j.at("pi_pow").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("PiScaled: bad JSON: ") + e.what());
  }
}

std::string PiScaled::to_string() const {
  if (pi_pow_ == 0) return coeff_.to_string();
  return coeff_.to_string() + "*pi^" + std::to_string(pi_pow_);
}

}  // namespace trio
