#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trio/hp/real.hpp"
#include "trio/report.hpp"

namespace trio::suites {

struct RunConfig {
  std::uint64_t seed = 42;
  hp::Precision precision = 0;  // 0 picks each suite's default
  unsigned workers = 1;
};

struct SuiteSpec {
  std::string name;
  std::string summary;
  std::function<Report(const RunConfig&)> run;
};

/// Every module suite at desk-scale defaults, sorted by name.
const std::vector<SuiteSpec>& registry();

std::vector<std::string> suite_names();

/// Runs one suite by name; throws DomainError for an unknown name.
Report run_suite(std::string_view name, const RunConfig& config);

/// Runs the named suites on config.workers threads and returns them sorted
/// by suite name regardless of completion order. The first exception (in
/// name order) is rethrown after every worker has finished.
std::vector<Report> run_suites(std::span<const std::string> names, const RunConfig& config);

std::vector<Report> run_all(const RunConfig& config);

}  // namespace trio::suites
