// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// fails. An optional argument names the trio CLI for the determinism check;
// without it the check runs the suites in-process.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "trio/bernoulli.hpp"
#include "trio/hp/grosswald.hpp"
#include "trio/hp/special.hpp"
#include "trio/li.hpp"
#include "trio/mcl.hpp"
#include "trio/pseudochar.hpp"
#include "trio/ramanujan.hpp"
#include "trio/suites.hpp"
#include "trio/zetafam.hpp"

namespace {

using trio::Rational;
using trio::Report;
using trio::Status;
using trio::hp::Precision;
using trio::hp::Real;

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_report(const Report& r) {
  const auto* f = r.first_failure();
  if (f != nullptr) return {false, r.suite() + ": " + f->id + " lhs=" + f->lhs + " rhs=" + f->rhs};
  return {true, std::to_string(r.size()) + " cases"};
}

bool has_pass(const Report& r, const std::string& id) {
  const auto* c = r.find(id);
  return c != nullptr && c->status == Status::pass;
}

Outcome table_reproduction() {
  const char* b[] = {"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730"};
  const char* bs[] = {"1",    "1/4",     "1/6",  "-1/32",  "-1/30",     "1/64",     "1/42",
                      "-17/1024", "-1/30", "31/1024", "5/66", "-691/8192", "-691/2730"};
  unsigned equal = 0;
  for (unsigned s = 0; s <= 12; ++s) {
    equal += trio::bernoulli::bernoulli(s) == Rational::parse(b[s]);
    equal += trio::bernoulli::bstar(s) == Rational::parse(bs[s]);
  }
  return {equal == 26, std::to_string(equal) + "/26 exact equalities"};
}

Outcome bernoulli_trio() {
  const Report r = trio::bernoulli::verify_trio(200);
  Outcome o = from_report(r);
  const bool clauses = has_pass(r, "i.even") && has_pass(r, "i.odd") && has_pass(r, "ii") &&
                       has_pass(r, "iii.product") && has_pass(r, "iii.inverse");
  // Product checked to order 2 * 200, which covers order 100.
  return {o.ok && clauses, o.detail + ", series order 400"};
}

Outcome zeta14() {
  const Report r = trio::zeta::zeta14_check();
  const bool ok = has_pass(r, "closed-form") && has_pass(r, "pair-weights") && has_pass(r, "quadratic.normalized") &&
                  has_pass(r, "alternating-expansion") && r.passed();
  return {ok, "closed form, pair weights 4098/1038/318, normalized quadratic, alternating expansion"};
}

Outcome mcl_equivalence() {
  const Report r = trio::mcl::verify_random(16, 500, 42);
  bool counts = true;
  for (unsigned s = 1; s <= 16; ++s) counts = counts && trio::mcl::composition_counts(s).monomials == mpz_class(1) << (s - 1);
  Outcome o = from_report(r);
  return {o.ok && counts, o.detail + (counts ? ", monomial counts 2^{s-1} for s <= 16" : ", monomial count mismatch")};
}

Outcome ramanujan_suite() {
  const Report r = trio::ramanujan::verify_all(50);
  return from_report(r);
}

Outcome root_atlas() {
  const Report r = trio::suites::run_suite("roots", {42, 256, 1});
  Outcome o = from_report(r);
  unsigned unit = 0;
  unsigned half = 0;
  for (unsigned k = 2; k <= 51; ++k) {
    const std::string p = "r" + std::to_string(k) + ".";
    unit += has_pass(r, p + "unit-circle") && has_pass(r, p + "real-count") && has_pass(r, p + "z0-range");
    half += has_pass(r, p + "half.exact");
  }
  const bool ok = o.ok && unit == 25 && half == 25 && has_pass(r, "z0.decreasing");
  return {ok, std::to_string(unit) + " odd r certified, " + std::to_string(half) + " even r with +-1/2 exact; " + o.detail};
}

Outcome li_algebra() {
  const Report r = trio::li::verify_algebraic(200, 10, 42);
  Outcome o = from_report(r);
  return {o.ok && has_pass(r, "determinant.recurrence"), o.detail};
}

// Richardson-extrapolated centered differences of log xi at s = 1.
Real log_xi_derivative_at_one(Precision w) {
  constexpr int levels = 8;
  std::vector<std::vector<Real>> table(levels);
  for (int k = 0; k < levels; ++k) {
    const Real h = trio::hp::pow2(-12 - k, w);
    const Real up = log(trio::hp::xi(trio::hp::Complex(Real(1L, w) + h), w).re());
    const Real down = log(trio::hp::xi(trio::hp::Complex(Real(1L, w) - h), w).re());
    table[k].push_back((up - down) / ldexp(h, 1));
    for (int j = 1; j <= k; ++j) {
      const Real factor = trio::hp::pow2(2 * j, w);
      table[k].push_back((table[k][j - 1] * factor - table[k - 1][j - 1]) / (factor - 1L));
    }
  }
  return table.back().back();
}

Outcome li_numerics() {
  const Precision p = 256;
  const auto result = trio::li::li_report(20, p);
  Outcome o = from_report(result.report);
  bool positive = result.rows.size() == 20;
  double worst_spread = -1e9;
  for (const auto& row : result.rows) {
    positive = positive && row.lambda.sign() > 0;
    if (!row.spread.is_zero()) worst_spread = std::max(worst_spread, trio::hp::log2_abs(row.spread));
  }
  const bool spread_ok = worst_spread < -208;
  const Precision w = p + 192;
  const Real diff = abs(result.rows.front().lambda.with_precision(w) - log_xi_derivative_at_one(w));
  const bool lambda1_ok = diff.is_zero() || trio::hp::log2_abs(diff) < -200;
  std::ostringstream d;
  d << "max spread 2^" << static_cast<long>(worst_spread) << ", all lambda_n > 0: " << (positive ? "yes" : "no")
    << ", |lambda_1 - finite difference| = 2^" << (diff.is_zero() ? -9999 : static_cast<long>(trio::hp::log2_abs(diff)));
  if (!o.ok) d << "; " << o.detail;
  return {o.ok && positive && spread_ok && lambda1_ok, d.str()};
}

Outcome grosswald() {
  const Precision p = 192;
  const Real pi = trio::hp::pi(p);
  unsigned positive = 0;
  double worst = -1e9;
  bool ok = true;
  for (unsigned s = 1; s <= 6; ++s) {
    Report r("grosswald");
    r.absorb(trio::hp::verify_grosswald_identities(s, p), "g");
    r.absorb(trio::hp::verify_ramanujan_identity(s, pi, p), "alpha=pi");
    r.absorb(trio::hp::verify_ramanujan_identity(s, ldexp(pi, -1), p), "alpha=pi/2");
    r.absorb(trio::hp::verify_ramanujan_identity(s, ldexp(pi, 1), p), "alpha=2pi");
    ok = ok && r.passed();
    positive += has_pass(r, "g.sum.4s-1.positive") && has_pass(r, "g.sum.4s+1.positive");
    for (const auto& c : r.cases()) {
      if (c.status != Status::pass || c.residual.empty() || c.id.find("positive") != std::string::npos) continue;
      const double v = std::strtod(c.residual.c_str(), nullptr);
      if (v != 0.0) worst = std::max(worst, std::log2(v));
    }
  }
  ok = ok && positive == 6 && worst < -160;
  std::ostringstream d;
  d << "max residual 2^" << static_cast<long>(worst) << ", positivity for " << positive << "/6 orders";
  return {ok, d.str()};
}

Outcome pseudo_inequalities() {
  const unsigned top = 134;
  const Precision p = trio::pseudo::inequality_required_precision(top);
  const Report r = trio::pseudo::verify_inequalities(17, top, p);
  const std::pair<const char*, unsigned> proven[] = {{"zeta", 17}, {"theta", 38}, {"inv-zeta", 34}, {"inv-theta", 114}};
  unsigned rows = 0;
  bool all = true;
  for (const auto& [name, t] : proven) {
    for (unsigned s = t; s <= t + 20; ++s) {
      for (unsigned k : {2 * s, 2 * s - 1}) {
        const bool hit = has_pass(r, "s" + std::to_string(s) + ".k" + std::to_string(k) + "." + name);
        all = all && hit;
        rows += hit;
      }
    }
  }
  Outcome o = from_report(r);
  return {o.ok && all, std::to_string(rows) + "/168 threshold rows at P = " + std::to_string(p) + ", " + o.detail};
}

Outcome pseudo_decay_sine_bounds() {
  Report r("pseudo");
  r.absorb(trio::pseudo::verify_factorial_decay(1200), "decay");
  r.absorb(trio::pseudo::verify_sine_form(40, trio::pseudo::default_sine_grid(256), 256), "sine");
  r.absorb(trio::pseudo::elementary_bounds(64, 256), "bounds");
  r.absorb(trio::pseudo::verify_definitions(60), "definitions");
  return from_report(r);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) {
    const trio::suites::RunConfig a{42, 0, 1};
    const trio::suites::RunConfig b{42, 0, 4};
    const std::string x = trio::to_json(trio::suites::run_all(a));
    const std::string y = trio::to_json(trio::suites::run_all(b));
    return {x == y && !x.empty(), "in-process, " + std::to_string(x.size()) + " bytes"};
  }
  const std::string first = "acceptance_verify_1.json";
  const std::string second = "acceptance_verify_2.json";
  const int rc1 = std::system((cli + " verify all --seed 42 --format json --out " + first).c_str());
  const int rc2 = std::system((cli + " verify all --seed 42 --format json --workers 4 --out " + second).c_str());
  const std::string x = slurp(first);
  const std::string y = slurp(second);
  std::remove(first.c_str());
  std::remove(second.c_str());
  const bool ok = rc1 == 0 && rc2 == 0 && !x.empty() && x == y;
  return {ok, "two CLI runs, " + std::to_string(x.size()) + " bytes" + (x == y ? ", identical" : ", differ")};
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {"Bernoulli table B_s, B*_s for s = 0..12", 1, table_reproduction},
      {"Bernoulli trio clauses for s <= 200", 30, bernoulli_trio},
      {"zeta(14) closed form, quadratic and alternating forms", 1, zeta14},
      {"MCL recurrence = determinant = compositions, 500 inputs", 300, mcl_equivalence},
      {"Ramanujan polynomial identities for s <= 50", 120, ramanujan_suite},
      {"root atlas r <= 51 at P = 256", 600, root_atlas},
      {"Li determinant = recurrence on random rationals", 30, li_algebra},
      {"Li coefficients n <= 20 at P = 256", 900, li_numerics},
      {"Grosswald and Ramanujan identities s <= 6 at P = 192", 300, grosswald},
      {"pseudo-characteristic inequalities at thresholds + 20", 600, pseudo_inequalities},
      {"factorial decay, sine form and elementary bounds", 300, pseudo_decay_sine_bounds},
      {"verify all is byte-identical across runs", 0, [&] { return determinism(cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failures += !pass;
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::cout << (pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << c.name << "  ["
              << timing << "]  " << o.detail << (in_time ? "" : " (over time limit)") << '\n'
              << std::flush;
  }
  return failures == 0 ? 0 : 1;
}
