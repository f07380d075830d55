#include "trio/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "trio/errors.hpp"

namespace trio {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::extrapolated: return "extrapolated";
    case Status::observational: return "observational";
  }
  return "unknown";
}

void Report::check(std::string id, std::string ref, bool ok, std::string lhs, std::string rhs,
                   std::string residual) {
  cases_.push_back({std::move(id), std::move(ref), ok ? Status::pass : Status::fail, std::move(lhs),
                    std::move(rhs), std::move(residual)});
}

void Report::observe(std::string id, std::string ref, std::string lhs, std::string rhs,
                     std::string residual) {
  cases_.push_back({std::move(id), std::move(ref), Status::observational, std::move(lhs),
                    std::move(rhs), std::move(residual)});
}

void Report::absorb(const Report& other, std::string_view prefix) {
  for (Case c : other.cases_) {
    if (!prefix.empty()) c.id = std::string(prefix) + "." + c.id;
    cases_.push_back(std::move(c));
  }
}

bool Report::passed() const { return first_failure() == nullptr; }

const Case* Report::first_failure() const {
  auto it = std::find_if(cases_.begin(), cases_.end(),
                         [](const Case& c) { return c.status == Status::fail; });
  return it == cases_.end() ? nullptr : &*it;
}

const Case* Report::find(std::string_view id) const {
  auto it = std::find_if(cases_.begin(), cases_.end(), [&](const Case& c) { return c.id == id; });
  return it == cases_.end() ? nullptr : &*it;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw DomainError("unknown format: " + std::string(name));
}

std::string to_json(std::span<const Report> reports, bool with_timing) {
  nlohmann::ordered_json root;
  bool all = true;
  auto suites = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json s;
    s["suite"] = r.suite();
    s["passed"] = r.passed();
    if (with_timing) s["wall_time"] = r.wall_seconds;
    auto cases = nlohmann::ordered_json::array();
    for (const auto& c : r.cases()) {
      cases.push_back({{"id", c.id},
                       {"ref", c.ref},
                       {"status", std::string(to_string(c.status))},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"residual", c.residual}});
    }
    s["cases"] = std::move(cases);
    suites.push_back(std::move(s));
    all = all && r.passed();
  }
  root["passed"] = all;
  root["suites"] = std::move(suites);
  return root.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(std::span<const Report> reports, bool with_timing) {
  std::ostringstream os;
  os << "suite,id,ref,status,lhs,rhs,residual";
  if (with_timing) os << ",wall_time";
  os << "\n";
  for (const auto& r : reports) {
    for (const auto& c : r.cases()) {
      os << csv_field(r.suite()) << ',' << csv_field(c.id) << ',' << csv_field(c.ref) << ','
         << to_string(c.status) << ',' << csv_field(c.lhs) << ',' << csv_field(c.rhs) << ','
         << csv_field(c.residual);
      if (with_timing) os << ',' << r.wall_seconds;
      os << "\n";
    }
  }
  return os.str();
}

std::string to_text(std::span<const Report> reports, bool with_timing) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "== " << r.suite() << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.size()
       << " cases";
    if (with_timing) os << ", " << r.wall_seconds << " s";
    os << ")\n";
    for (const auto& c : r.cases()) {
      os << "  [" << to_string(c.status) << "] " << c.id;
      if (!c.ref.empty()) os << " (" << c.ref << ")";
      if (!c.lhs.empty() || !c.rhs.empty()) os << ": " << c.lhs << " vs " << c.rhs;
      if (!c.residual.empty()) os << " residual " << c.residual;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace

std::string render(std::span<const Report> reports, Format format, bool with_timing) {
  switch (format) {
    case Format::json: return to_json(reports, with_timing);
    case Format::csv: return to_csv(reports, with_timing);
    case Format::text: return to_text(reports, with_timing);
  }
  return {};
}

}  // namespace trio
