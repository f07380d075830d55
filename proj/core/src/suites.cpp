#include "trio/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <random>
#include <thread>

#include "trio/bernoulli.hpp"
#include "trio/errors.hpp"
#include "trio/hp/grosswald.hpp"
#include "trio/hp/special.hpp"
#include "trio/li.hpp"
#include "trio/mcl.hpp"
#include "trio/pseudochar.hpp"
#include "trio/ramanujan.hpp"
#include "trio/series.hpp"
#include "trio/zetafam.hpp"

namespace trio::suites {
namespace {

// Runs body(i) for i in [0, n) on up to `workers` threads; each index is
// claimed once, so results written to slot i do not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& body) {
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    loop();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(loop);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

hp::Precision pick(const RunConfig& config, hp::Precision fallback) {
  return config.precision == 0 ? fallback : config.precision;
}

std::string idx(const char* prefix, unsigned n) { return prefix + std::to_string(n); }

Report exactcore_suite(const RunConfig& config) {
  Report report("exactcore");
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> grade(0, 12);

  unsigned rational_bad = 0;
  unsigned scaled_bad = 0;
  for (unsigned trial = 0; trial < 500; ++trial) {
    const Rational q = mcl::random_rational(rng);
    if (Rational::parse(q.to_string()) != q) ++rational_bad;
    const PiScaled x(q, grade(rng));
    if (PiScaled::from_json(x.to_json()) != x) ++scaled_bad;
  }
  report.check("rational.round-trip", "parse(to_string(q)) = q", rational_bad == 0,
               std::to_string(rational_bad) + " mismatches", "0", "500 samples");
  report.check("pi-scaled.round-trip", "from_json(to_json(x)) = x", scaled_bad == 0,
               std::to_string(scaled_bad) + " mismatches", "0", "500 samples");

  unsigned inverse_bad = 0;
  for (unsigned trial = 0; trial < 100; ++trial) {
    auto coeffs = mcl::random_sequence(rng, 21);
    if (coeffs[0].is_zero()) coeffs[0] = Rational(1);
    const RatSeries a(std::move(coeffs));
    if (series_mul(a, series_inverse(a)) != RatSeries::unit(a.order())) ++inverse_bad;
  }
  report.check("series.inverse", "a * a^{-1} = 1 to order 20", inverse_bad == 0,
               std::to_string(inverse_bad) + " mismatches", "0", "100 samples");

  const PiScaled z = PiScaled(Rational(1, 6), 2) * PiScaled(Rational(1, 90), 4);
  report.check("pi-scaled.grade", "pi^2/6 * pi^4/90 = pi^6/540", z == PiScaled(Rational(1, 540), 6),
               z.to_string(), "1/540*pi^6");
  return report;
}

Report bernoulli_suite(const RunConfig&) {
  static const char* const kB[] = {"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42",
                                   "0", "-1/30", "0",  "5/66", "0", "-691/2730"};
  static const char* const kBstar[] = {"1",    "1/4",  "1/6",      "-1/32", "-1/30", "1/64",     "1/42",
                                       "-17/1024", "-1/30", "31/1024", "5/66", "-691/8192", "-691/2730"};
  Report report("bernoulli");
  for (unsigned s = 0; s <= 12; ++s) {
    const Rational b = bernoulli::bernoulli(s);
    const Rational expected = Rational::parse(kB[s]);
    report.check(idx("table.B.s", s), "tabulated B_s", b == expected, b.to_string(), expected.to_string());
  }
  for (unsigned s = 0; s <= 12; ++s) {
    const Rational b = bernoulli::bstar(s);
    const Rational expected = Rational::parse(kBstar[s]);
    report.check(idx("table.Bstar.s", s), "tabulated B*_s", b == expected, b.to_string(), expected.to_string());
  }

  // sum B_k x^k / k! times (e^x - 1)/x is 1.
  constexpr std::size_t order = 60;
  std::vector<Rational> gen(order + 1);
  std::vector<Rational> expm1_over_x(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    gen[k] = bernoulli::bernoulli(static_cast<unsigned>(k)) / Rational(factorial(k));
    expm1_over_x[k] = Rational(1) / Rational(factorial(k + 1));
  }
  const bool gen_ok = series_mul(RatSeries(gen), RatSeries(expm1_over_x)) == RatSeries::unit(order);
  report.check("generating-function", "x/(e^x-1) * (e^x-1)/x = 1 to order 60", gen_ok,
               gen_ok ? "unit" : "not unit", "unit");

  report.absorb(bernoulli::verify_trio(200), "trio");
  return report;
}

Report mcl_suite(const RunConfig& config) {
  Report report("mcl");
  report.absorb(mcl::verify_random(16, 500, config.seed), "random");

  for (unsigned s = 1; s <= 16; ++s) {
    const auto counts = mcl::composition_counts(s);
    bool per_parts_ok = counts.per_parts.size() == s;
    for (unsigned t = 1; per_parts_ok && t <= s; ++t) {
      per_parts_ok = counts.per_parts[t - 1] == bernoulli::binomial_cached(s - 1, t - 1);
    }
    const mpz_class expected = mpz_class(1) << (s - 1);
    report.check(idx("counts.s", s), "monomials = 2^{s-1}, C(s-1, t-1) per t",
                 counts.monomials == expected && per_parts_ok, counts.monomials.get_str(), expected.get_str());
  }

  for (unsigned s = 1; s <= 20; ++s) {
    const auto b = mcl::bernoulli_via_mcl(s);
    report.check(idx("bernoulli.v.s", s), "s! Delta_s(v) = B_s", b.from_v == bernoulli::bernoulli(s),
                 b.from_v.to_string(), bernoulli::bernoulli(s).to_string());
    report.check(idx("bernoulli.u.s", s), "B_{2s} from Delta_s(u)", b.negative_reproduces,
                 b.from_u_negative.to_string(), bernoulli::bernoulli(2 * s).to_string());
    report.observe(idx("bernoulli.u-uncorrected.s", s), "double-minus form", b.from_u_double_negative.to_string(),
                   bernoulli::bernoulli(2 * s).to_string());
  }

  std::mt19937_64 rng(config.seed ^ 0x636f666163746f72ULL);
  const auto h = mcl::random_sequence(rng, 8);
  report.absorb(mcl::cofactor_symmetry(h, 8), "cofactor");
  return report;
}

Report zetafam_suite(const RunConfig&) {
  Report report("zetafam");
  report.absorb(zeta::verify_family_recurrences(30), "recurrences");
  report.absorb(zeta::verify_family_relations(30), "relations");
  for (unsigned s = 1; s <= 12; ++s) {
    report.absorb(zeta::quadratic_identities(s), idx("quadratic.s", s));
    report.absorb(zeta::composition_term_counts(s), idx("counts.s", s));
  }
  for (auto f : {zeta::Scaled::two_eta, zeta::Scaled::zeta, zeta::Scaled::four_phi, zeta::Scaled::four_theta}) {
    for (unsigned s = 1; s <= 24; ++s) {
      report.absorb(zeta::fourway(s, f), "fourway." + std::string(zeta::to_string(f)) + idx(".s", s));
    }
  }
  for (unsigned s = 1; s <= 30; ++s) {
    const auto c = zeta::classic_recurrence_residual(s);
    report.check(idx("classic.s", s), "alternating sum over k = 0..s vanishes", c.sum_with_k0.is_zero(),
                 c.sum_with_k0.to_string(), "0");
    report.observe(idx("classic.uncorrected.s", s), "sum over k = 1..s", c.sum.to_string(),
                   zeta::zeta_even(s).to_string());
  }
  report.absorb(zeta::zeta14_check(), "zeta14");
  return report;
}

Report ramanujan_suite(const RunConfig&) {
  Report report("ramanujan");
  report.absorb(ramanujan::verify_all(50), "poly");
  return report;
}

Report roots_suite(const RunConfig& config) {
  const hp::Precision p = pick(config, 256);
  const long tol = 56 - static_cast<long>(p);
  constexpr unsigned r_min = 2;
  constexpr unsigned r_max = 51;
  std::vector<Report> parts(r_max - r_min + 1, Report(""));
  std::vector<hp::Real> z0(parts.size());
  parallel_for(parts.size(), config.workers, [&](std::size_t i) {
    const unsigned r = r_min + static_cast<unsigned>(i);
    const auto entry = ramanujan::root_atlas(r, p);
    parts[i] = ramanujan::certify(entry, tol);
    if (r % 2 == 1) z0[i] = ramanujan::largest_real_root(entry);
  });

  Report report("roots");
  for (std::size_t i = 0; i < parts.size(); ++i) report.absorb(parts[i], idx("r", r_min + static_cast<unsigned>(i)));

  std::string first_bad;
  const hp::Real* prev = nullptr;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if ((r_min + i) % 2 == 0) continue;
    if (prev != nullptr && !(z0[i] < *prev) && first_bad.empty()) first_bad = idx("r", r_min + static_cast<unsigned>(i));
    prev = &z0[i];
  }
  report.check("z0.decreasing", "largest real root decreases in odd r", first_bad.empty(),
               first_bad.empty() ? "strictly decreasing" : "breaks at " + first_bad, "strictly decreasing");
  report.observe("z0.last", "largest real root of R_51", z0.back().to_string(30), "2");
  return report;
}

Report hp_suite(const RunConfig& config) {
  const hp::Precision p = pick(config, 192);
  Report report("hp");
  const hp::Real pi = hp::pi(p + 64);
  for (unsigned s = 1; s <= 16; ++s) {
    const PiScaled exact = zeta::zeta_even(s);
    const hp::Real expected = hp::Real(exact.coeff(), p + 64) * hp::pow(pi, static_cast<long>(exact.pi_pow()));
    const hp::Real value = hp::zeta(hp::Real(2L * s, p), p);
    const long tol = 8 - static_cast<long>(p);
    report.check(idx("zeta.even.s", s), "Euler-Maclaurin zeta(2s) against the exact value",
                 hp::close(value, expected.with_precision(p), tol), value.to_string(40), expected.to_string(40));
  }

  std::vector<Report> parts(12, Report(""));
  parallel_for(parts.size(), config.workers, [&](std::size_t i) {
    const unsigned s = static_cast<unsigned>(i / 2) + 1;
    if (i % 2 == 0) {
      parts[i] = hp::verify_grosswald_identities(s, p);
      return;
    }
    const hp::Real pi_p = hp::pi(p);
    Report r("");
    r.absorb(hp::verify_ramanujan_identity(s, pi_p, p), "alpha=pi");
    r.absorb(hp::verify_ramanujan_identity(s, hp::ldexp(pi_p, -1), p), "alpha=pi/2");
    r.absorb(hp::verify_ramanujan_identity(s, hp::ldexp(pi_p, 1), p), "alpha=2pi");
    parts[i] = std::move(r);
  });
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const unsigned s = static_cast<unsigned>(i / 2) + 1;
    report.absorb(parts[i], idx("s", s) + (i % 2 == 0 ? ".grosswald" : ".ramanujan"));
  }
  return report;
}

Report li_suite(const RunConfig& config) {
  const hp::Precision p = pick(config, 256);
  Report report("li");
  report.absorb(li::li_report(20, p).report, "numeric");
  report.absorb(li::verify_algebraic(200, 10, config.seed), "algebra");
  report.absorb(li::baez_duarte_report(64, p), "baez-duarte");
  return report;
}

Report pseudo_suite(const RunConfig& config) {
  const hp::Precision p = pick(config, 256);
  Report report("pseudo");
  std::vector<Report> parts(5, Report(""));
  parallel_for(parts.size(), config.workers, [&](std::size_t i) {
    switch (i) {
      case 0:
        parts[i] = pseudo::verify_definitions(60);
        break;
      case 1:
        parts[i] = pseudo::verify_inequalities(17, 134, std::max(p, pseudo::inequality_required_precision(134)));
        break;
      case 2:
        parts[i] = pseudo::verify_factorial_decay(std::max<hp::Precision>(p, 1200));
        break;
      case 3:
        parts[i] = pseudo::verify_sine_form(40, pseudo::default_sine_grid(p), p);
        break;
      default:
        parts[i] = pseudo::elementary_bounds(64, p);
        break;
    }
  });
  const char* const names[] = {"definitions", "inequalities", "decay", "sine", "bounds"};
  for (std::size_t i = 0; i < parts.size(); ++i) report.absorb(parts[i], names[i]);
  return report;
}

}  // namespace

const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> specs = [] {
    std::vector<SuiteSpec> v = {
        {"bernoulli", "tables, generating function and the Bernoulli trio to s = 200", bernoulli_suite},
        {"exactcore", "rational and pi-graded round trips, series inversion", exactcore_suite},
        {"hp", "high-precision zeta, Grosswald and Ramanujan identities for s <= 6", hp_suite},
        {"li", "Li coefficients to n = 20, algebraic routes, Baez-Duarte coefficients", li_suite},
        {"mcl", "MCL recurrences, determinants and compositions on random input", mcl_suite},
        {"pseudo", "pseudo-characteristic inequalities, decay and elementary bounds", pseudo_suite},
        {"ramanujan", "Ramanujan polynomial identities for s <= 50", ramanujan_suite},
        {"roots", "root atlas for r = 2..51", roots_suite},
        {"zetafam", "zeta-family recurrences, determinants and expansions", zetafam_suite},
    };
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return v;
  }();
  return specs;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : registry()) names.push_back(s.name);
  return names;
}

Report run_suite(std::string_view name, const RunConfig& config) {
  for (const auto& spec : registry()) {
    if (spec.name == name) return spec.run(config);
  }
  throw DomainError("unknown suite: " + std::string(name));
}

std::vector<Report> run_suites(std::span<const std::string> names, const RunConfig& config) {
  std::vector<std::string> sorted(names.begin(), names.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& n : sorted) {
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const auto& s) { return s.name == n; })) {
      throw DomainError("unknown suite: " + n);
    }
  }

  // Suites share the worker budget with their own inner loops.
  RunConfig inner = config;
  inner.workers = std::max(1u, config.workers / std::max<unsigned>(1, static_cast<unsigned>(sorted.size())));
  std::vector<Report> out(sorted.size(), Report(""));
  parallel_for(sorted.size(), config.workers, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    out[i] = run_suite(sorted[i], inner);
    out[i].wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  return out;
}

std::vector<Report> run_all(const RunConfig& config) {
  const auto names = suite_names();
  return run_suites(names, config);
}

}  // namespace trio::suites
