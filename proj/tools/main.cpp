#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"
#include "trio/bernoulli.hpp"
#include "trio/errors.hpp"
#include "trio/hp/grosswald.hpp"
#include "trio/hp/special.hpp"
#include "trio/li.hpp"
#include "trio/mcl.hpp"
#include "trio/pseudochar.hpp"
#include "trio/ramanujan.hpp"
#include "trio/suites.hpp"
#include "trio/zetafam.hpp"

namespace {

using trio::Format;
using trio::Rational;
using trio::Report;
using trio::cli::Table;
using trio::hp::Precision;

struct Globals {
  std::string format = "json";
  std::string out;
  Precision precision = 0;
  std::uint64_t seed = 42;
  unsigned workers = 1;

  Format fmt() const { return trio::parse_format(format); }
  Precision bits(Precision fallback) const { return precision == 0 ? fallback : precision; }
};

int finish(const Globals& g, const std::vector<Report>& reports) {
  trio::cli::emit(trio::render(reports, g.fmt()), g.out);
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); }) ? 0 : 1;
}

int finish(const Globals& g, const Report& report) { return finish(g, std::vector<Report>{report}); }

int finish(const Globals& g, const Table& table) {
  trio::cli::emit(trio::cli::render_table(table, g.fmt()), g.out);
  return 0;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(Rational::parse(s));
  return out;
}

// ---- bernoulli ----

void add_bernoulli(CLI::App& app, Globals& g, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("bernoulli", "Bernoulli-family tables and checks");
  auto kind = std::make_shared<std::string>("B");
  auto max_s = std::make_shared<unsigned>(12);
  cmd->add_option("--kind", *kind, "B, Bstar or Bprime")->check(CLI::IsMember({"B", "Bstar", "Bprime"}));
  cmd->add_option("--max-s", *max_s, "largest index")->check(CLI::Range(0u, 2000u));
  cmd->callback([&g, &action, cmd, kind, max_s] {
    if (cmd->get_subcommands().size() > 0) return;
    action = [&g, kind, max_s] {
      const auto table = trio::bernoulli::table(trio::bernoulli::parse_kind(*kind), *max_s);
      Table t{{"s", "value"}, {}, {}};
      t.meta["kind"] = *kind;
      for (std::size_t s = 0; s < table.values.size(); ++s) {
        t.rows.push_back({std::to_string(s), table.values[s].to_string()});
      }
      return finish(g, t);
    };
  });

  auto* verify = cmd->add_subcommand("verify", "Bernoulli trio clauses");
  auto verify_max = std::make_shared<unsigned>(200);
  verify->add_option("--max-s", *verify_max, "largest index")->check(CLI::Range(1u, 2000u));
  verify->callback([&g, &action, verify_max] {
    action = [&g, verify_max] { return finish(g, trio::bernoulli::verify_trio(*verify_max)); };
  });
}

// ---- ramanujan ----

trio::ramanujan::RamanujanPoly poly_for(unsigned r) {
  if (r == 0) throw trio::DomainError("ramanujan: r must be >= 1");
  return r % 2 == 1 ? trio::ramanujan::r_odd((r - 1) / 2) : trio::ramanujan::r_even(r / 2);
}

void add_ramanujan(CLI::App& app, Globals& g, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("ramanujan", "Ramanujan polynomials and roots");
  cmd->require_subcommand(1);

  auto* poly = cmd->add_subcommand("poly", "exact coefficients of R_r");
  auto r = std::make_shared<unsigned>(7);
  poly->add_option("--r", *r, "polynomial index")->required()->check(CLI::Range(1u, 400u));
  poly->callback([&g, &action, r] {
    action = [&g, r] {
      const auto p = poly_for(*r);
      Table t{{"power", "coeff"}, {}, {}};
      t.meta["r"] = *r;
      t.meta["degree"] = p.poly.degree();
      for (std::size_t k = 0; k < p.poly.coeffs().size(); ++k) {
        if (!p.poly.coeffs()[k].is_zero()) t.rows.push_back({std::to_string(k), p.poly.coeffs()[k].to_string()});
      }
      return finish(g, t);
    };
  });

  auto* verify = cmd->add_subcommand("verify", "polynomial identities for s <= max-s");
  auto max_s = std::make_shared<unsigned>(50);
  verify->add_option("--max-s", *max_s, "largest s")->check(CLI::Range(1u, 200u));
  verify->callback([&g, &action, max_s] {
    action = [&g, max_s] { return finish(g, trio::ramanujan::verify_all(*max_s)); };
  });

  auto* roots = cmd->add_subcommand("roots", "all roots of R_r by Aberth iteration");
  auto rr = std::make_shared<unsigned>(7);
  roots->add_option("--r", *rr, "polynomial index")->required()->check(CLI::Range(2u, 200u));
  roots->callback([&g, &action, rr] {
    action = [&g, rr] {
      const Precision p = g.bits(256);
      const auto entry = trio::ramanujan::root_atlas(*rr, p);
      const int digits = trio::hp::decimal_digits(p);
      Table t{{"re", "im", "modulus", "residual"}, {}, {}};
      t.meta["r"] = *rr;
      t.meta["precision"] = p;
      t.meta["digits"] = digits;
      t.meta["iterations"] = entry.iterations;
      for (std::size_t i = 0; i < entry.roots.size(); ++i) {
        t.rows.push_back({entry.roots[i].re().to_string(digits), entry.roots[i].im().to_string(digits),
                          entry.moduli[i].to_string(digits), entry.residuals[i].to_string(6)});
      }
      return finish(g, t);
    };
  });
}

// ---- mcl ----

void add_mcl(CLI::App& app, Globals& g, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("mcl", "MCL determinants");
  cmd->require_subcommand(1);

  for (auto type : {trio::mcl::Type::delta, trio::mcl::Type::psi, trio::mcl::Type::lambda}) {
    const char* name = type == trio::mcl::Type::delta ? "delta" : (type == trio::mcl::Type::psi ? "psi" : "lambda");
    auto* sub = cmd->add_subcommand(name, std::string("type-") + std::to_string(static_cast<int>(type)) +
                                              " determinant by recurrence and, for s <= 12, literally");
    // -h would clash with --h.
    sub->set_help_flag("--help", "print this help message and exit");
    auto s = std::make_shared<unsigned>(0);
    auto h = std::make_shared<std::vector<std::string>>();
    auto H = std::make_shared<std::vector<std::string>>();
    auto G = std::make_shared<std::vector<std::string>>();
    sub->add_option("--s", *s, "order")->required();
    sub->add_option("--h", *h, "rational entries h_1, h_2, ...")->required()->delimiter(',');
    if (type != trio::mcl::Type::delta) sub->add_option("--H", *H, "first-column weights")->required()->delimiter(',');
    if (type == trio::mcl::Type::lambda) sub->add_option("--G", *G, "last-row weights")->required()->delimiter(',');
    sub->callback([&g, &action, type, name, s, h, H, G] {
      action = [&g, type, name, s, h, H, G] {
        trio::mcl::MCLInput input{parse_rationals(*h), parse_rationals(*H), parse_rationals(*G), *s};
        const Rational rec = trio::mcl::recurrence(type, input, *s);
        Table t{{"type", "s", "recurrence", "determinant"}, {}, {}};
        const std::string naive =
            *s <= trio::mcl::kNaiveMaxOrder ? trio::mcl::naive(type, input, *s).to_string() : std::string();
        t.rows.push_back({name, std::to_string(*s), rec.to_string(), naive});
        return finish(g, t);
      };
    });
  }

  auto* verify = cmd->add_subcommand("verify", "randomized recurrence, determinant and composition checks");
  auto max_s = std::make_shared<unsigned>(16);
  auto trials = std::make_shared<unsigned>(500);
  verify->add_option("--max-s", *max_s, "largest order")->check(CLI::Range(1u, 24u));
  verify->add_option("--trials", *trials, "random inputs")->check(CLI::Range(1u, 100000u));
  verify->callback([&g, &action, max_s, trials] {
    action = [&g, max_s, trials] { return finish(g, trio::mcl::verify_random(*max_s, *trials, g.seed)); };
  });
}

// ---- zeta ----

void add_zeta(CLI::App& app, Globals& g, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("zeta", "exact zeta-family values");
  cmd->require_subcommand(1);

  auto* value = cmd->add_subcommand("value", "closed form at an even argument");
  auto family = std::make_shared<std::string>("zeta");
  auto arg = std::make_shared<unsigned>(2);
  value->add_option("--family", *family, "zeta, eta, theta or phi")
      ->check(CLI::IsMember({"zeta", "eta", "theta", "phi"}));
  value->add_option("--arg", *arg, "even argument 2s")->required()->check(CLI::Range(2u, 4000u));
  value->callback([&g, &action, family, arg] {
    action = [&g, family, arg] {
      if (*arg % 2 != 0) throw trio::DomainError("zeta value: --arg must be even");
      const auto v = trio::zeta::family_value(trio::zeta::parse_family(*family), *arg / 2);
      if (g.fmt() == Format::json) {
        nlohmann::ordered_json doc;
        doc["family"] = *family;
        doc["arg"] = *arg;
        doc["value"] = nlohmann::ordered_json::parse(v.value.to_json());
        trio::cli::emit(doc.dump(2), g.out);
        return 0;
      }
      Table t{{"family", "arg", "coeff", "pi_pow"}, {}, {}};
      t.rows.push_back({*family, std::to_string(*arg), v.value.coeff().to_string(), std::to_string(v.value.pi_pow())});
      return finish(g, t);
    };
  });

  auto* verify = cmd->add_subcommand("verify", "recurrences, relations and the four-way expansion");
  auto max_s = std::make_shared<unsigned>(24);
  auto paths = std::make_shared<std::string>("all");
  verify->add_option("--max-s", *max_s, "largest s")->check(CLI::Range(1u, 200u));
  verify->add_option("--paths", *paths, "all, recurrence, determinant or composition")
      ->check(CLI::IsMember({"all", "recurrence", "determinant", "composition"}));
  verify->callback([&g, &action, max_s, paths] {
    action = [&g, max_s, paths] {
      const std::string& which = *paths;
      const auto keep = [&](const std::string& id) {
        if (which == "all") return true;
        if (which == "recurrence") return id.starts_with("recurrence");
        if (which == "determinant") return id.starts_with("determinant");
        return id.starts_with("composition");
      };
      Report report("zeta.verify");
      if (which == "all" || which == "recurrence") {
        report.absorb(trio::zeta::verify_family_recurrences(*max_s), "recurrences");
      }
      if (which == "all") report.absorb(trio::zeta::verify_family_relations(*max_s), "relations");
      const unsigned top = std::min(*max_s, trio::mcl::kCompositionMaxOrder);
      for (auto f : {trio::zeta::Scaled::two_eta, trio::zeta::Scaled::zeta, trio::zeta::Scaled::four_phi,
                     trio::zeta::Scaled::four_theta}) {
        for (unsigned s = 1; s <= top; ++s) {
          const Report part = trio::zeta::fourway(s, f);
          const std::string prefix = "fourway." + std::string(trio::zeta::to_string(f)) + ".s" + std::to_string(s);
          for (const auto& c : part.cases()) {
            if (!keep(c.id)) continue;
            trio::Case copy = c;
            copy.id = prefix + "." + c.id;
            report.add(std::move(copy));
          }
        }
      }
      return finish(g, report);
    };
  });
}

// ---- hp ----

void add_hp(CLI::App& app, Globals& g, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("hp", "high-precision zeta and Grosswald sums");
  cmd->require_subcommand(1);

  auto* zeta = cmd->add_subcommand("zeta", "zeta(s) at a real or complex point");
  auto s = std::make_shared<std::string>();
  zeta->add_option("--s", *s, "RE or RE,IM")->required();
  zeta->callback([&g, &action, s] {
    action = [&g, s] {
      const Precision p = g.bits(128);
      const trio::hp::Complex z = trio::hp::parse_complex(*s, p);
      const trio::hp::Complex v = trio::hp::zeta(z, p);
      const int digits = trio::hp::decimal_digits(p);
      Table t{{"re", "im"}, {}, {}};
      t.meta["s"] = *s;
      t.meta["precision"] = p;
      t.meta["digits"] = digits;
      t.rows.push_back({v.re().to_string(digits), v.im().to_string(digits)});
      return finish(g, t);
    };
  });

  auto* gw = cmd->add_subcommand("grosswald", "F_s(z) for Im z > 0");
  auto index = std::make_shared<long>(3);
  auto z = std::make_shared<std::string>();
  gw->add_option("--s", *index, "index s")->required();
  gw->add_option("--z", *z, "RE,IM with IM > 0")->required();
  gw->callback([&g, &action, index, z] {
    action = [&g, index, z] {
      const Precision p = g.bits(192);
      const auto v = trio::hp::grosswald_F(*index, trio::hp::parse_complex(*z, p), p);
      const int digits = trio::hp::decimal_digits(p);
      Table t{{"re", "im", "terms"}, {}, {}};
      t.meta["s"] = *index;
      t.meta["z"] = *z;
      t.meta["precision"] = p;
      t.meta["digits"] = digits;
      t.rows.push_back({v.value.re().to_string(digits), v.value.im().to_string(digits), std::to_string(v.terms_used)});
      return finish(g, t);
    };
  });

  auto* vg = cmd->add_subcommand("verify-grosswald", "Grosswald and Ramanujan identities for s <= max-s");
  auto max_s = std::make_shared<unsigned>(6);
  vg->add_option("--max-s", *max_s, "largest s")->check(CLI::Range(1u, 40u));
  vg->callback([&g, &action, max_s] {
    action = [&g, max_s] {
      const Precision p = g.bits(192);
      Report report("hp.verify-grosswald");
      const trio::hp::Real pi = trio::hp::pi(p);
      for (unsigned k = 1; k <= *max_s; ++k) {
        report.absorb(trio::hp::verify_grosswald_identities(k, p), "s" + std::to_string(k) + ".grosswald");
        report.absorb(trio::hp::verify_ramanujan_identity(k, pi, p), "s" + std::to_string(k) + ".ramanujan");
      }
      return finish(g, report);
    };
  });
}

// ---- li ----

void add_li(CLI::App& app, Globals& g, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("li", "Li coefficients");
  cmd->require_subcommand(1);

  auto* compute = cmd->add_subcommand("compute", "lambda_n by three routes");
  auto n_max = std::make_shared<unsigned>(20);
  compute->add_option("--n-max", *n_max, "largest n")->check(CLI::Range(1u, 30u));
  compute->callback([&g, &action, n_max] {
    action = [&g, n_max] {
      const Precision p = g.bits(256);
      const auto result = trio::li::li_report(*n_max, p, g.workers);
      const int digits = trio::hp::decimal_digits(p);
      const auto show = [&](const trio::hp::Real& x) { return x.to_string(digits); };
      const int rc = result.report.passed() ? 0 : 1;
      if (g.fmt() == Format::json) {
        nlohmann::ordered_json doc;
        doc["passed"] = result.report.passed();
        doc["precision"] = p;
        doc["digits"] = digits;
        doc["contour_points"] = result.taylor.contour_points;
        auto& rows = doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : result.rows) {
          nlohmann::ordered_json r;
          r["n"] = row.n;
          r["lambda"] = show(row.lambda);
          r["spread"] = row.spread.to_string(6);
          r["routes"] = {{"rec", show(row.lambda)},
                         {"comp", row.has_composition ? show(row.composition) : std::string()},
                         {"det", show(row.determinant)}};
          rows.push_back(std::move(r));
        }
        trio::cli::emit(doc.dump(2), g.out);
        return rc;
      }
      Table t{{"n", "lambda", "spread", "rec", "comp", "det"}, {}, {}};
      t.meta["passed"] = result.report.passed();
      t.meta["precision"] = p;
      for (const auto& row : result.rows) {
        t.rows.push_back({std::to_string(row.n), show(row.lambda), row.spread.to_string(6), show(row.lambda),
                          row.has_composition ? show(row.composition) : std::string(), show(row.determinant)});
      }
      trio::cli::emit(trio::cli::render_table(t, g.fmt()), g.out);
      return rc;
    };
  });

  auto* bd = cmd->add_subcommand("baez-duarte", "Baez-Duarte coefficients c_t");
  auto t_max = std::make_shared<unsigned>(64);
  bd->add_option("--t-max", *t_max, "largest t")->check(CLI::Range(0u, 64u));
  bd->callback([&g, &action, t_max] {
    action = [&g, t_max] {
      const Precision p = g.bits(128);
      const int digits = trio::hp::decimal_digits(p);
      Table t{{"t", "c", "scaled"}, {}, {}};
      t.meta["precision"] = p;
      t.meta["digits"] = digits;
      for (const auto& row : trio::li::baez_duarte_c(*t_max, p)) {
        t.rows.push_back({std::to_string(row.t), row.c.to_string(digits), row.scaled.to_string(12)});
      }
      return finish(g, t);
    };
  });
}

// ---- pseudo ----

void add_pseudo(CLI::App& app, Globals& g, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("pseudo", "pseudo-characteristic polynomials");
  cmd->require_subcommand(1);
  auto* verify = cmd->add_subcommand("verify", "inequalities, factorial decay, sine form or elementary bounds");
  auto which = std::make_shared<std::string>();
  auto s_min = std::make_shared<unsigned>(0);
  auto s_max = std::make_shared<unsigned>(0);
  verify->add_option("--which", *which, "inequalities, decay, sine, bounds or definitions")
      ->required()
      ->check(CLI::IsMember({"inequalities", "decay", "sine", "bounds", "definitions"}));
  verify->add_option("--s-min", *s_min, "smallest order (inequalities)");
  verify->add_option("--s-max", *s_max, "largest order");
  verify->callback([&g, &action, which, s_min, s_max] {
    action = [&g, which, s_min, s_max] {
      const auto or_default = [](unsigned v, unsigned d) { return v == 0 ? d : v; };
      if (*which == "inequalities") {
        const unsigned hi = or_default(*s_max, 40);
        return finish(g, trio::pseudo::verify_inequalities(or_default(*s_min, 17), hi,
                                                           g.bits(trio::pseudo::inequality_required_precision(hi))));
      }
      if (*which == "decay") return finish(g, trio::pseudo::verify_factorial_decay(g.bits(1200)));
      if (*which == "sine") {
        const Precision p = g.bits(256);
        return finish(g, trio::pseudo::verify_sine_form(or_default(*s_max, 40), trio::pseudo::default_sine_grid(p), p));
      }
      if (*which == "bounds") return finish(g, trio::pseudo::elementary_bounds(or_default(*s_max, 64), g.bits(256)));
      return finish(g, trio::pseudo::verify_definitions(or_default(*s_max, 60)));
    };
  });
}

// ---- verify ----

void add_verify(CLI::App& app, Globals& g, std::function<int()>& action) {
  auto* cmd = app.add_subcommand("verify", "run module suites at desk-scale defaults");
  auto target = std::make_shared<std::string>("all");
  std::vector<std::string> choices = trio::suites::suite_names();
  choices.insert(choices.begin(), "all");
  cmd->add_option("target", *target, "all or one suite name")->check(CLI::IsMember(choices));
  auto timing = std::make_shared<bool>(false);
  cmd->add_flag("--timing", *timing, "include wall time per suite (output is no longer byte-stable)");
  cmd->callback([&g, &action, target, timing] {
    action = [&g, target, timing] {
      const trio::suites::RunConfig config{g.seed, g.precision, g.workers};
      const auto reports = *target == "all"
                               ? trio::suites::run_all(config)
                               : std::vector<Report>{trio::suites::run_suite(*target, config)};
      trio::cli::emit(trio::render(reports, g.fmt(), *timing), g.out);
      return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); }) ? 0 : 1;
    };
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trio: exact and high-precision checks for Bernoulli, zeta and Li identities"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "json, csv or text")
      ->envname("TRIO_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "write output to PATH instead of stdout")->envname("TRIO_OUT");
  app.add_option("--precision", g.precision, "working precision in bits (0: per-command default)")
      ->envname("TRIO_PRECISION")
      ->check(CLI::Range(0u, 1u << 20));
  app.add_option("--seed", g.seed, "seed for randomized suites")->envname("TRIO_SEED");
  app.add_option("--workers", g.workers, "worker threads")->envname("TRIO_WORKERS")->check(CLI::Range(1u, 256u));

  std::function<int()> action;
  add_bernoulli(app, g, action);
  add_ramanujan(app, g, action);
  add_mcl(app, g, action);
  add_zeta(app, g, action);
  add_hp(app, g, action);
  add_li(app, g, action);
  add_pseudo(app, g, action);
  add_verify(app, g, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (!action) {
    std::cerr << app.help();
    return 2;
  }

  try {
    return action();
  } catch (const trio::PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << '\n';
    return 3;
  } catch (const trio::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
