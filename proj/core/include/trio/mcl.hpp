#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "trio/errors.hpp"
#include "trio/rational.hpp"
#include "trio/report.hpp"

namespace trio::mcl {

// Determinants of minor corner layered (MCL) matrices. Sequences are
// 1-indexed in the mathematics and 0-indexed here: h[0] holds h_1.
//
// The templates work for any field-like T with ADL one_like/zero_like
// (Rational, PiScaled, hp::Real).

enum class Type { delta = 1, psi = 2, lambda = 3 };

struct MCLInput {
  std::vector<Rational> h;
  std::vector<Rational> H;  // type 2 and 3
  std::vector<Rational> G;  // type 3
  unsigned s = 0;
};

inline void require_length(std::size_t have, std::size_t s, const char* name) {
  if (have < s) {
    throw DomainError(std::string("MCL: sequence ") + name + " has length " +
                      std::to_string(have) + " < order " + std::to_string(s));
  }
}

namespace detail {
template <class T>
T unit_for(std::span<const T> seq) {
  using trio::one_like;
  return seq.empty() ? T(1) : one_like(seq[0]);
}
}  // namespace detail

/// Delta_0..Delta_s from Delta_s = -sum_{k<s} h_{s-k} Delta_k.
template <class T>
std::vector<T> delta_sequence(std::span<const T> h, std::size_t s) {
  require_length(h.size(), s, "h");
  std::vector<T> d;
  d.reserve(s + 1);
  d.push_back(detail::unit_for(h));
  for (std::size_t n = 1; n <= s; ++n) {
    T acc = h[n - 1] * d[0];
    for (std::size_t k = 1; k < n; ++k) acc += h[n - k - 1] * d[k];
    d.push_back(-acc);
  }
  return d;
}

template <class T>
T delta(std::span<const T> h, std::size_t s) {
  return delta_sequence(h, s).back();
}

/// Psi_0..Psi_s from the first-column expansion Psi_s = -sum H_{s-k} Delta_k(h).
template <class T>
std::vector<T> psi_sequence(std::span<const T> h, std::span<const T> H, std::size_t s) {
  require_length(H.size(), s, "H");
  const std::vector<T> d = delta_sequence(h, s == 0 ? 0 : s - 1);
  std::vector<T> out;
  out.reserve(s + 1);
  out.push_back(detail::unit_for(H));
  for (std::size_t n = 1; n <= s; ++n) {
    T acc = H[n - 1] * d[0];
    for (std::size_t k = 1; k < n; ++k) acc += H[n - k - 1] * d[k];
    out.push_back(-acc);
  }
  return out;
}

template <class T>
T psi(std::span<const T> h, std::span<const T> H, std::size_t s) {
  return psi_sequence(h, H, s).back();
}

/// Psi_0..Psi_s from the last-row expansion Psi_s = -H_s - sum_{k=1}^{s-1} h_{s-k} Psi_k.
template <class T>
std::vector<T> psi_row_sequence(std::span<const T> h, std::span<const T> H, std::size_t s) {
  require_length(H.size(), s, "H");
  require_length(h.size(), s == 0 ? 0 : s - 1, "h");
  std::vector<T> out;
  out.reserve(s + 1);
  out.push_back(detail::unit_for(H));
  for (std::size_t n = 1; n <= s; ++n) {
    T acc = H[n - 1];
    for (std::size_t k = 1; k < n; ++k) acc += h[n - k - 1] * out[k];
    out.push_back(-acc);
  }
  return out;
}

template <class T>
T psi_row(std::span<const T> h, std::span<const T> H, std::size_t s) {
  return psi_row_sequence(h, H, s).back();
}

/// Lambda_s = -sum_{k<s} H_{s-k} Psi_k(h, G).
template <class T>
T lambda3(std::span<const T> h, std::span<const T> H, std::span<const T> G, std::size_t s) {
  require_length(H.size(), s, "H");
  require_length(G.size(), s, "G");
  if (s == 0) return detail::unit_for(H);
  const std::vector<T> p = psi_sequence(h, G, s - 1);
  T acc = H[s - 1] * p[0];
  for (std::size_t k = 1; k < s; ++k) acc += H[s - k - 1] * p[k];
  return -acc;
}

// ---- literal matrices (oracle, s <= 12) ----

inline constexpr unsigned kNaiveMaxOrder = 12;

using Matrix = std::vector<std::vector<Rational>>;

/// The s x s matrix U_s, V_s or W_s (without the (-1)^s prefactor).
Matrix build_matrix(Type type, const MCLInput& input, unsigned s);

/// Exact determinant: rows are scaled to integers, then fraction-free
/// Bareiss elimination with row pivoting.
Rational determinant(const Matrix& m);

/// (-1)^s det of the literal matrix; s <= kNaiveMaxOrder.
Rational naive(Type type, const MCLInput& input, unsigned s);
Rational delta_naive(std::span<const Rational> h, unsigned s);
Rational psi_naive(std::span<const Rational> h, std::span<const Rational> H, unsigned s);
Rational lambda_naive(std::span<const Rational> h, std::span<const Rational> H,
                      std::span<const Rational> G, unsigned s);

/// Recurrence value for the given type.
Rational recurrence(Type type, const MCLInput& input, unsigned s);

/// Checks every recurrence form against the literal determinants for all
/// orders 1..input.s, plus the equivalence of the two type-2 expansions.
Report verify_recurrences(const MCLInput& input);

struct CharPolyCheck {
  Rational literal;     // det(M_s - mu I)
  Rational recurrence;  // (-1)^s times the recurrence with h_1, H_1, G_1 shifted by -mu
  bool equal() const { return literal == recurrence; }
};

CharPolyCheck char_poly_shift(Type type, const MCLInput& input, const Rational& mu);

/// Minor of U_n with row i and column j deleted (1-based).
Rational type1_minor(std::span<const Rational> h, unsigned n, unsigned i, unsigned j);

/// For every i >= j compares the normalized minor (-1)^{n-1} M_{i,j} with
/// (-1)^{i+j} Delta_{n-i} Delta_{j-1}; the raw minor is recorded alongside.
Report cofactor_symmetry(std::span<const Rational> h, unsigned n);

// ---- compositions ----

inline constexpr unsigned kCompositionMaxOrder = 24;

/// Multiplicity vector: d[i-1] copies of part i, with sum i d_i = s and t parts.
struct Composition {
  std::vector<unsigned> d;
  unsigned t = 0;
};

/// Streams every multiplicity vector for s in decreasing-part order.
void for_each_composition(unsigned s, const std::function<void(const Composition&)>& visit);

/// t! / (d_1! ... d_s!).
mpz_class multinomial(const Composition& c);

struct CompositionCounts {
  mpz_class monomials;               // sum of multinomial weights, 2^{s-1}
  std::vector<mpz_class> per_parts;  // index t-1, C(s-1, t-1)
  std::size_t partitions = 0;        // distinct multiplicity vectors
};

CompositionCounts composition_counts(unsigned s);

template <class T>
T delta_by_compositions(std::span<const T> h, unsigned s) {
  require_length(h.size(), s, "h");
  if (s > kCompositionMaxOrder) throw DomainError("delta_by_compositions: s > 24");
  using trio::one_like;
  using trio::zero_like;
  if (s == 0) return detail::unit_for(h);
  T total = zero_like(h[0]);
  for_each_composition(s, [&](const Composition& c) {
    T term = one_like(h[0]) * Rational(multinomial(c));
    for (std::size_t i = 0; i < c.d.size(); ++i) {
      for (unsigned e = 0; e < c.d[i]; ++e) term *= h[i];
    }
    if (c.t % 2 == 1) {
      total -= term;
    } else {
      total += term;
    }
  });
  return total;
}

// ---- Bernoulli numbers from determinants ----

/// u_k = 1/(2k+1)!, v_k = 1/(k+1)!; first n entries.
std::vector<Rational> u_vector(unsigned n);
std::vector<Rational> v_vector(unsigned n);

struct BernoulliViaMcl {
  unsigned s = 0;
  Rational from_v;                // s! Delta_s(v), targets B_s
  Rational from_u_negative;       // -(2s)! Delta_s(u) / (2(2^{2s-1}-1)), targets B_{2s}
  Rational from_u_double_negative;  // same with an extra minus sign
  bool negative_reproduces = false;
  bool double_negative_reproduces = false;
};

BernoulliViaMcl bernoulli_via_mcl(unsigned s);

// ---- randomized checks ----

/// Rational with numerator in [-50, 50] and denominator in [1, 30].
Rational random_rational(std::mt19937_64& rng);
std::vector<Rational> random_sequence(std::mt19937_64& rng, std::size_t n);

/// Randomized recurrence, composition and collapse checks for orders up to
/// max_s (naive comparisons are capped at kNaiveMaxOrder).
Report verify_random(unsigned max_s, unsigned trials, std::uint64_t seed);

}  // namespace trio::mcl
