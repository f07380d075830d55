#include "trio/mcl.hpp"

#include <algorithm>

#include "trio/bernoulli.hpp"

namespace trio::mcl {

namespace {

using RSpan = std::span<const Rational>;

Rational sign_pow(unsigned n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

void require_naive(unsigned s) {
  if (s > kNaiveMaxOrder) {
    throw DomainError("MCL: literal determinant limited to s <= " + std::to_string(kNaiveMaxOrder));
  }
}

}  // namespace

Matrix build_matrix(Type type, const MCLInput& in, unsigned s) {
  require_length(in.h.size(), type == Type::delta ? s : (s == 0 ? 0 : s - 1), "h");
  if (type != Type::delta) require_length(in.H.size(), s, "H");
  if (type == Type::lambda) require_length(in.G.size(), s == 0 ? 0 : s - 1, "G");
  Matrix m(s, std::vector<Rational>(s));
  for (unsigned i = 0; i < s; ++i) {
    for (unsigned j = 0; j < s; ++j) {
      if (j == i + 1) {
        m[i][j] = 1;
      } else if (j <= i) {
        const unsigned k = i - j;  // h_{k+1}
        if (type != Type::delta && j == 0) {
          m[i][j] = in.H[i];
        } else if (type == Type::lambda && i + 1 == s) {
          m[i][j] = in.G[k];
        } else {
          m[i][j] = in.h[k];
        }
      }
    }
  }
  return m;
}

Rational determinant(const Matrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return Rational(1);
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  Rational scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (input[i].size() != n) throw DomainError("determinant: matrix is not square");
    mpz_class l = 1;
    for (const auto& x : input[i]) {
      mpz_class den = x.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class v = input[i][j].get() * l;
      a[i][j] = v.get_num();
    }
    scale *= Rational(l);
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1]);
  if (sign < 0) det = -det;
  return det / scale;
}

Rational naive(Type type, const MCLInput& input, unsigned s) {
  require_naive(s);
  return sign_pow(s) * determinant(build_matrix(type, input, s));
}

Rational delta_naive(RSpan h, unsigned s) {
  return naive(Type::delta, {{h.begin(), h.end()}, {}, {}, s}, s);
}

Rational psi_naive(RSpan h, RSpan H, unsigned s) {
  return naive(Type::psi, {{h.begin(), h.end()}, {H.begin(), H.end()}, {}, s}, s);
}

Rational lambda_naive(RSpan h, RSpan H, RSpan G, unsigned s) {
  return naive(Type::lambda, {{h.begin(), h.end()}, {H.begin(), H.end()}, {G.begin(), G.end()}, s},
               s);
}

Rational recurrence(Type type, const MCLInput& in, unsigned s) {
  switch (type) {
    case Type::delta: return delta<Rational>(in.h, s);
    case Type::psi: return psi<Rational>(in.h, in.H, s);
    case Type::lambda: return lambda3<Rational>(in.h, in.H, in.G, s);
  }
  return Rational(0);
}

Report verify_recurrences(const MCLInput& in) {
  require_naive(in.s);
  Report report("mcl.recurrences");
  const bool has_psi = in.H.size() >= in.s;
  const bool has_lambda = has_psi && in.G.size() >= in.s;

  auto sweep = [&](const std::string& id, const std::string& ref, auto&& lhs, auto&& rhs) {
    for (unsigned k = 1; k <= in.s; ++k) {
      const Rational a = lhs(k), b = rhs(k);
      if (a != b) {
        report.check(id, ref, false, "s=" + std::to_string(k) + ": " + a.to_string(),
                     b.to_string(), (a - b).to_string());
        return;
      }
    }
    report.check(id, ref, true, "s=1.." + std::to_string(in.s), "equal", "0");
  };

  const std::vector<Rational> d = delta_sequence<Rational>(in.h, in.s);
  sweep("delta.recurrence", "Delta_s = -sum h_{s-k} Delta_k",
        [&](unsigned k) { return d[k]; }, [&](unsigned k) { return delta_naive(in.h, k); });
  if (has_psi) {
    const auto col = psi_sequence<Rational>(in.h, in.H, in.s);
    const auto row = psi_row_sequence<Rational>(in.h, in.H, in.s);
    sweep("psi.column", "Psi_s = -sum H_{s-k} Delta_k", [&](unsigned k) { return col[k]; },
          [&](unsigned k) { return psi_naive(in.h, in.H, k); });
    sweep("psi.row", "Psi_s = -H_s - sum h_{s-k} Psi_k", [&](unsigned k) { return row[k]; },
          [&](unsigned k) { return psi_naive(in.h, in.H, k); });
    sweep("psi.equivalence", "column and row expansions agree", [&](unsigned k) { return col[k]; },
          [&](unsigned k) { return row[k]; });
  }
  if (has_lambda) {
    sweep("lambda.recurrence", "Lambda_s = -sum H_{s-k} Psi_k(h, G)",
          [&](unsigned k) { return lambda3<Rational>(in.h, in.H, in.G, k); },
          [&](unsigned k) { return lambda_naive(in.h, in.H, in.G, k); });
  }
  return report;
}

CharPolyCheck char_poly_shift(Type type, const MCLInput& input, const Rational& mu) {
  const unsigned s = input.s;
  require_naive(s);
  Matrix m = build_matrix(type, input, s);
  for (unsigned i = 0; i < s; ++i) m[i][i] -= mu;
  MCLInput shifted = input;
  if (!shifted.h.empty()) shifted.h[0] -= mu;
  if (!shifted.H.empty()) shifted.H[0] -= mu;
  if (!shifted.G.empty()) shifted.G[0] -= mu;
  return {determinant(m), sign_pow(s) * recurrence(type, shifted, s)};
}

Rational type1_minor(RSpan h, unsigned n, unsigned i, unsigned j) {
  if (i < 1 || j < 1 || i > n || j > n) throw DomainError("type1_minor: index out of range");
  const Matrix u = build_matrix(Type::delta, {{h.begin(), h.end()}, {}, {}, n}, n);
  Matrix minor;
  for (unsigned r = 0; r < n; ++r) {
    if (r + 1 == i) continue;
    std::vector<Rational> row;
    for (unsigned c = 0; c < n; ++c) {
      if (c + 1 != j) row.push_back(u[r][c]);
    }
    minor.push_back(std::move(row));
  }
  return determinant(minor);
}

Report cofactor_symmetry(RSpan h, unsigned n) {
  if (n < 2 || n > 10) throw DomainError("cofactor_symmetry: requires 2 <= n <= 10");
  require_length(h.size(), n, "h");
  Report report("mcl.cofactor");
  const std::vector<Rational> d = delta_sequence(h, n);
  bool raw_all = true;
  std::string raw_first;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= i; ++j) {
      const Rational minor = type1_minor(h, n, i, j);
      const Rational normalized = sign_pow(n - 1) * minor;
      const Rational rhs = sign_pow(i + j) * d[n - i] * d[j - 1];
      const std::string id = "minor(" + std::to_string(i) + "," + std::to_string(j) + ")";
      report.check(id, "(-1)^{n-1} M_{i,j} = (-1)^{i+j} Delta_{n-i} Delta_{j-1}",
                   normalized == rhs, normalized.to_string(), rhs.to_string(),
                   (normalized - rhs).to_string());
      if (minor != rhs && raw_all) {
        raw_all = false;
        raw_first = id;
      }
    }
  }
  report.observe("raw-minor-form", "M_{i,j} = (-1)^{i+j} Delta_{n-i} Delta_{j-1} without normalization",
                 raw_all ? "holds for all i >= j" : "first mismatch at " + raw_first,
                 "n=" + std::to_string(n));
  return report;
}

namespace {

void descend(unsigned remaining, unsigned max_part, Composition& c,
             const std::function<void(const Composition&)>& visit) {
  if (remaining == 0) {
    visit(c);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    for (unsigned m = 1; m * part <= remaining; ++m) {
      c.d[part - 1] = m;
      c.t += m;
      descend(remaining - m * part, part - 1, c, visit);
      c.t -= m;
    }
    c.d[part - 1] = 0;
  }
}

}  // namespace

void for_each_composition(unsigned s, const std::function<void(const Composition&)>& visit) {
  if (s == 0) throw DomainError("for_each_composition: s must be >= 1");
  if (s > kCompositionMaxOrder) throw DomainError("for_each_composition: s > 24");
  Composition c;
  c.d.assign(s, 0);
  descend(s, s, c, visit);
}

mpz_class multinomial(const Composition& c) {
  mpz_class out = factorial(c.t);
  for (unsigned m : c.d) {
    if (m > 1) out /= factorial(m);
  }
  return out;
}

CompositionCounts composition_counts(unsigned s) {
  CompositionCounts counts;
  counts.per_parts.assign(s, 0);
  for_each_composition(s, [&](const Composition& c) {
    const mpz_class w = multinomial(c);
    counts.monomials += w;
    counts.per_parts[c.t - 1] += w;
    ++counts.partitions;
  });
  return counts;
}

std::vector<Rational> u_vector(unsigned n) {
  std::vector<Rational> u;
  for (unsigned k = 1; k <= n; ++k) u.emplace_back(mpz_class(1), factorial(2 * k + 1));
  return u;
}

std::vector<Rational> v_vector(unsigned n) {
  std::vector<Rational> v;
  for (unsigned k = 1; k <= n; ++k) v.emplace_back(mpz_class(1), factorial(k + 1));
  return v;
}

BernoulliViaMcl bernoulli_via_mcl(unsigned s) {
  if (s == 0) throw DomainError("bernoulli_via_mcl: s must be >= 1");
  BernoulliViaMcl out;
  out.s = s;
  const auto v = v_vector(s);
  out.from_v = Rational(factorial(s)) * delta<Rational>(v, s);
  const auto u = u_vector(s);
  const Rational base = Rational(factorial(2 * s)) * delta<Rational>(u, s) /
                        (Rational(2) * (Rational::pow2(2 * static_cast<long>(s) - 1) - Rational(1)));
  out.from_u_negative = -base;
  out.from_u_double_negative = base;
  const Rational target = bernoulli::bernoulli(2 * s);
  out.negative_reproduces = out.from_u_negative == target;
  out.double_negative_reproduces = out.from_u_double_negative == target;
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 101) - 50;
  const long den = static_cast<long>(rng() % 30) + 1;
  return Rational(mpz_class(num), mpz_class(den));
}

std::vector<Rational> random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_rational(rng));
  return out;
}

Report verify_random(unsigned max_s, unsigned trials, std::uint64_t seed) {
  if (max_s < 1) throw DomainError("verify_random: max_s must be >= 1");
  std::mt19937_64 rng(seed);
  Report report("mcl.random");
  const unsigned naive_cap = std::min(max_s, kNaiveMaxOrder);
  const unsigned comp_cap = std::min(max_s, 16u);

  unsigned rec_fail = 0, comp_fail = 0, collapse_fail = 0, char_fail = 0;
  std::string rec_first, comp_first, collapse_first, char_first;
  for (unsigned t = 0; t < trials; ++t) {
    const unsigned s = 1 + static_cast<unsigned>(rng() % naive_cap);
    MCLInput in{random_sequence(rng, s), random_sequence(rng, s), random_sequence(rng, s), s};
    const std::string tag = "trial " + std::to_string(t) + " s=" + std::to_string(s);
    // Every order up to s, so each input also checks its leading minors.
    for (unsigned k = 1; k <= s; ++k) {
      for (Type type : {Type::delta, Type::psi, Type::lambda}) {
        if (recurrence(type, in, k) != naive(type, in, k) && rec_fail++ == 0) rec_first = tag;
      }
    }
    if (psi_sequence<Rational>(in.h, in.H, s) != psi_row_sequence<Rational>(in.h, in.H, s) && rec_fail++ == 0) {
      rec_first = tag;
    }
    const unsigned cs = 1 + static_cast<unsigned>(rng() % comp_cap);
    const auto hc = random_sequence(rng, cs);
    const auto dc = delta_sequence<Rational>(hc, cs);
    for (unsigned k = 1; k <= cs; ++k) {
      if (delta_by_compositions<Rational>(hc, k) != dc[k] && comp_fail++ == 0) comp_first = tag;
    }
    const bool collapses = psi<Rational>(in.h, in.h, s) == delta<Rational>(in.h, s) &&
                           lambda3<Rational>(in.h, in.H, in.h, s) == psi<Rational>(in.h, in.H, s);
    if (!collapses && collapse_fail++ == 0) collapse_first = tag;
    if (s <= 8) {
      const Rational mu = random_rational(rng);
      for (Type type : {Type::delta, Type::psi, Type::lambda}) {
        if (!char_poly_shift(type, in, mu).equal() && char_fail++ == 0) char_first = tag;
      }
    }
  }
  const std::string n = std::to_string(trials) + " trials";
  auto add = [&](const char* id, const char* ref, unsigned fails, const std::string& first) {
    report.check(id, ref, fails == 0, fails == 0 ? n : first, "naive/recurrence agreement",
                 std::to_string(fails) + " mismatches");
  };
  add("recurrence-vs-literal", "all three types and both type-2 expansions", rec_fail, rec_first);
  add("compositions-vs-recurrence", "signed multinomial sum", comp_fail, comp_first);
  add("degenerate-collapse", "H = h gives Psi = Delta; G = h gives Lambda = Psi", collapse_fail,
      collapse_first);
  add("char-poly-shift", "det(M - mu I) via shifted recurrence", char_fail, char_first);

  for (unsigned s = 1; s <= std::min(max_s, 20u); ++s) {
    const CompositionCounts c = composition_counts(s);
    bool ok = c.monomials == mpz_class(1) << (s - 1);
    for (unsigned t = 1; t <= s && ok; ++t) ok = c.per_parts[t - 1] == binomial(s - 1, t - 1);
    if (!ok) {
      report.check("composition-counts", "2^{s-1} monomials, C(s-1,t-1) per t", false,
                   "s=" + std::to_string(s) + ": " + c.monomials.get_str(),
                   mpz_class(mpz_class(1) << (s - 1)).get_str());
      return report;
    }
  }
  report.check("composition-counts", "2^{s-1} monomials, C(s-1,t-1) per t", true,
               "s=1.." + std::to_string(std::min(max_s, 20u)), "exact", "0");
  return report;
}

}  // namespace trio::mcl
