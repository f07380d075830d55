#pragma once

#include <vector>

#include "trio/errors.hpp"
#include "trio/hp/complex.hpp"
#include "trio/poly.hpp"
#include "trio/report.hpp"

namespace trio::ramanujan {

struct RamanujanPoly {
  unsigned r = 0;
  RatPoly poly;
  bool odd() const noexcept { return r % 2 == 1; }
};

/// Q_r(z) = sum_k B*_{r+1-2k} B*_{2k} / ((r+1-2k)! (2k)!) z^{2k}, r >= 1.
RamanujanPoly q_poly(unsigned r);

/// R_{2s+1}(z) built from the classical B_{2k}, independently of q_poly.
RamanujanPoly r_odd(unsigned s);

/// R_{2s}(z) := Q_{2s}(z).
RamanujanPoly r_even(unsigned s);

/// Reciprocity, the two forms of the even/odd link and the two-term
/// reciprocal relation, all as exact coefficient comparisons.
Report verify_reciprocal(unsigned s);

/// Exact special values at 1, 2, 1/2 and, for even s, at i and i/2.
Report special_values(unsigned s);

/// sum_{k=0}^{s+1} (2^{2k}-1) B_{2s+2-2k} B_{2k} / ((2s+2-2k)! (2k)!).
Rational weighted_pair_sum(unsigned s);

/// Degree and parity of R_{2s} and R_{2s+1}.
Report verify_shape(unsigned s);

/// Everything above for s = 1..max_s in one suite.
Report verify_all(unsigned max_s);

struct RootAtlasEntry {
  unsigned r = 0;
  hp::Precision precision = 0;
  std::vector<hp::Complex> roots;  // sorted by (arg, modulus)
  std::vector<hp::Real> moduli;
  std::vector<hp::Real> residuals;  // |R_r(root)|
  std::vector<std::size_t> real_roots;  // indices with |Im| < 2^{20-P}
  unsigned iterations = 0;
};

/// Thrown when simultaneous iteration runs out of budget; carries the last
/// iterate.
class RootAtlasError : public ConvergenceError {
 public:
  RootAtlasError(const std::string& what, RootAtlasEntry partial)
      : ConvergenceError(what), partial_(std::move(partial)) {}
  const RootAtlasEntry& partial() const noexcept { return partial_; }

 private:
  RootAtlasEntry partial_;
};

/// All roots of R_r by Aberth iteration at precision P, Newton-polished.
/// Requires r >= 2 and P >= 128.
RootAtlasEntry root_atlas(unsigned r, hp::Precision p);

/// Largest real root z0 of an odd-index atlas entry.
hp::Real largest_real_root(const RootAtlasEntry& entry);

/// Residual threshold, conjugate and negation closure, real-root structure
/// and unit-circle moduli (odd r) or +-1/2 (even r). `modulus_log2_tol`
/// bounds ||z| - 1| for nonreal roots of odd r.
Report certify(const RootAtlasEntry& entry, long modulus_log2_tol);

}  // namespace trio::ramanujan
