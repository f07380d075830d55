#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "trio/hp/special.hpp"
#include "trio/ramanujan.hpp"

namespace trio::ramanujan {

namespace {

using hp::Complex;
using hp::Precision;
using hp::Real;

constexpr unsigned kMaxIterations = 1000;
constexpr unsigned kPolishSteps = 3;

struct Eval {
  Complex value;
  Complex derivative;
};

Eval horner(const std::vector<Real>& c, const Complex& z) {
  Complex v = Complex(c.back());
  Complex d = zero_like(v);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d = d * z + v;
    v = v * z + Complex(c[k]);
  }
  return {v, d};
}

Complex seed(double radius, double angle, Precision w) {
  return {Real(radius * std::cos(angle), w), Real(radius * std::sin(angle), w)};
}

std::vector<Complex> initial_guesses(const RamanujanPoly& poly, Precision w) {
  const std::size_t d = static_cast<std::size_t>(poly.poly.degree());
  std::vector<Complex> z;
  const std::vector<double> real_seeds =
      poly.odd() ? std::vector<double>{2.05, -2.05, 0.48, -0.48} : std::vector<double>{0.48, -0.48};
  for (double x : real_seeds) {
    if (z.size() < d) z.push_back(Complex(Real(x, w)));
  }
  const std::size_t m = d - z.size();
  for (std::size_t j = 0; j < m; ++j) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(m);
    z.push_back(seed(1.05, angle, w));
  }
  return z;
}

bool angle_less(const Complex& a, const Complex& b) {
  const double aa = arg(a).to_double();
  const double ab = arg(b).to_double();
  if (aa != ab) return aa < ab;
  return abs(a) < abs(b);
}

}  // namespace

RootAtlasEntry root_atlas(unsigned r, Precision p) {
  if (r < 2) throw DomainError("root_atlas: r must be >= 2");
  if (p < 128) throw PrecisionError("root_atlas: precision below 128 bits", 128);
  const RamanujanPoly poly = q_poly(r);
  const Precision w = p + 64;

  std::vector<Real> c;
  for (const Rational& q : poly.poly.coeffs()) c.emplace_back(q, w);

  RootAtlasEntry entry;
  entry.r = r;
  entry.precision = p;
  std::vector<Complex> z = initial_guesses(poly, w);
  const long stop = 16 - static_cast<long>(w);

  bool converged = false;
  for (unsigned it = 1; it <= kMaxIterations && !converged; ++it) {
    entry.iterations = it;
    long worst = std::numeric_limits<long>::min();
    for (std::size_t k = 0; k < z.size(); ++k) {
      const Eval e = horner(c, z[k]);
      if (e.value.is_zero()) continue;
      const Complex ratio = e.value / e.derivative;
      Complex repulsion = zero_like(ratio);
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) repulsion += one_like(ratio) / (z[k] - z[j]);
      }
      const Complex step = ratio / (one_like(ratio) - ratio * repulsion);
      z[k] -= step;
      const Real size = abs(step);
      if (!size.is_zero()) worst = std::max(worst, size.exponent2());
    }
    converged = worst <= stop;
  }
  if (!converged) {
    entry.roots = z;
    throw RootAtlasError("root_atlas: no convergence for r = " + std::to_string(r), std::move(entry));
  }

  for (auto& root : z) {
    for (unsigned i = 0; i < kPolishSteps; ++i) {
      const Eval e = horner(c, root);
      if (e.value.is_zero()) break;
      root -= e.value / e.derivative;
    }
  }
  for (auto& root : z) root = root.with_precision(p);
  std::sort(z.begin(), z.end(), angle_less);

  const long real_tol = 20 - static_cast<long>(p);
  for (std::size_t k = 0; k < z.size(); ++k) {
    entry.moduli.push_back(abs(z[k]));
    entry.residuals.push_back(abs(horner(c, z[k].with_precision(w)).value).with_precision(p));
    const Real im = abs(z[k].im());
    if (im.is_zero() || im.exponent2() <= real_tol) entry.real_roots.push_back(k);
  }
  entry.roots = std::move(z);
  return entry;
}

Real largest_real_root(const RootAtlasEntry& entry) {
  if (entry.real_roots.empty()) throw DomainError("largest_real_root: no real roots");
  Real best = entry.roots[entry.real_roots.front()].re();
  for (std::size_t k : entry.real_roots) best = std::max(best, entry.roots[k].re());
  return best;
}

namespace {

bool contains(const std::vector<Complex>& roots, const Complex& target, long log2_tol) {
  return std::any_of(roots.begin(), roots.end(),
                     [&](const Complex& z) { return hp::close(z, target, log2_tol); });
}

// Every root has a partner under `map` with no partner used twice.
template <class Map>
bool closed_under(const std::vector<Complex>& roots, Map map, long log2_tol) {
  std::vector<bool> used(roots.size(), false);
  for (const auto& z : roots) {
    const Complex image = map(z);
    bool found = false;
    for (std::size_t j = 0; j < roots.size() && !found; ++j) {
      if (!used[j] && hp::close(roots[j], image, log2_tol)) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

Report certify(const RootAtlasEntry& entry, long modulus_log2_tol) {
  Report report("ramanujan.roots.r" + std::to_string(entry.r));
  const Precision p = entry.precision;
  const long tol = 20 - static_cast<long>(p);
  const RamanujanPoly poly = q_poly(entry.r);

  Real worst(0L, p);
  for (const auto& res : entry.residuals) worst = std::max(worst, res);
  const long residual_limit = 10 - static_cast<long>(p);
  report.check("residuals", "max |R_r(root)| < 2^{10-P}", worst.is_zero() || worst.exponent2() <= residual_limit,
               worst.to_string(6), "2^" + std::to_string(residual_limit));
  const long count = static_cast<long>(entry.roots.size());
  report.check("count", "one root per degree", count == poly.poly.degree(), std::to_string(count),
               std::to_string(poly.poly.degree()));
  report.check("conjugate-closure", "roots closed under conjugation",
               closed_under(entry.roots, [](const Complex& z) { return conj(z); }, tol), "checked",
               "tolerance 2^" + std::to_string(tol));
  report.check("negation-closure", "roots closed under negation",
               closed_under(entry.roots, [](const Complex& z) { return -z; }, tol), "checked",
               "tolerance 2^" + std::to_string(tol));

  const std::size_t n_real = entry.real_roots.size();
  if (poly.odd()) {
    report.check("real-count", "exactly four real roots", n_real == 4, std::to_string(n_real), "4");
    if (n_real == 0) return report;
    const Real z0 = largest_real_root(entry);
    const bool in_range = z0 > Real(2L, p) && z0 < Real(Rational(11, 5), p);
    report.check("z0-range", "2 < z0 < 2.2", in_range, z0.to_string(30), "(2, 2.2)");
    const Complex zc(z0);
    const Complex inv = one_like(zc) / zc;
    const bool quad = contains(entry.roots, zc, tol) && contains(entry.roots, -zc, tol) &&
                      contains(entry.roots, inv, tol) && contains(entry.roots, -inv, tol);
    report.check("real-quadruple", "real roots are z0, 1/z0, -z0, -1/z0", quad, "checked", "");

    Real worst_modulus(0L, p);
    for (std::size_t k = 0; k < entry.roots.size(); ++k) {
      if (std::find(entry.real_roots.begin(), entry.real_roots.end(), k) != entry.real_roots.end()) continue;
      worst_modulus = std::max(worst_modulus, abs(entry.moduli[k] - 1L));
    }
    report.check("unit-circle", "nonreal roots on |z| = 1",
                 worst_modulus.is_zero() || worst_modulus.exponent2() <= modulus_log2_tol,
                 worst_modulus.to_string(6), "2^" + std::to_string(modulus_log2_tol));
  } else {
    const Rational half(1, 2);
    const bool exact = poly.poly.eval(half).is_zero() && poly.poly.eval(-half).is_zero();
    report.check("half.exact", "R_{2s}(+-1/2) = 0 exactly", exact, poly.poly.eval(half).to_string(), "0");
    const Complex h(Real(half, p));
    report.check("half.numeric", "+-1/2 among the computed roots",
                 contains(entry.roots, h, tol) && contains(entry.roots, -h, tol), "checked", "");
    report.observe("real-count", "number of real roots", std::to_string(n_real), "2");
    Real min_modulus(1000L, p);
    std::size_t outside = 0, nonreal = 0;
    for (std::size_t k = 0; k < entry.roots.size(); ++k) {
      if (std::find(entry.real_roots.begin(), entry.real_roots.end(), k) != entry.real_roots.end()) continue;
      ++nonreal;
      min_modulus = std::min(min_modulus, entry.moduli[k]);
      if (entry.moduli[k] > 1L) ++outside;
    }
    report.observe("moduli", "nonreal roots outside the unit circle",
                   std::to_string(outside) + "/" + std::to_string(nonreal), "min modulus",
                   nonreal ? min_modulus.to_string(20) : "none");
  }
  return report;
}

}  // namespace trio::ramanujan
