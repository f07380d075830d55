#include <map>
#include <mutex>

#include "trio/hp/special.hpp"

namespace trio::hp {

namespace {

Real agm_pi(Precision p) {
  const Precision w = p + 32;
  Real a(1L, w);
  Real b = sqrt(Real(Rational(mpz_class(1), mpz_class(2)), w));
  Real t(Rational(mpz_class(1), mpz_class(4)), w);
  for (int iter = 0; iter < 64; ++iter) {
    Real next = ldexp(a + b, -1);
    b = sqrt(a * b);
    const Real d = a - next;
    t -= ldexp(d * d, iter);
    a = std::move(next);
    if (close(a, b, -static_cast<long>(w))) break;
  }
  const Real s = a + b;
  return (s * s / ldexp(t, 2)).with_precision(p);
}

}  // namespace

Real pi(Precision p) {
  static std::mutex mutex;
  static std::map<Precision, Real> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, agm_pi(p)).first;
  return it->second;
}

}  // namespace trio::hp
