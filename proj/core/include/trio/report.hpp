#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trio {

enum class Status { pass, fail, extrapolated, observational };

std::string_view to_string(Status status);

/// One checked (or merely recorded) relation.
struct Case {
  std::string id;
  std::string ref;  // short name of the identity being exercised
  Status status = Status::pass;
  std::string lhs;
  std::string rhs;
  std::string residual;
};

/// Outcome of a verification suite. A suite passes iff no case failed;
/// extrapolated and observational rows never fail it.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const noexcept { return suite_; }
  std::span<const Case> cases() const noexcept { return cases_; }
  std::size_t size() const noexcept { return cases_.size(); }

  void add(Case c) { cases_.push_back(std::move(c)); }

  /// Records a pass/fail case.
  void check(std::string id, std::string ref, bool ok, std::string lhs, std::string rhs,
             std::string residual = {});

  /// Records an observational row.
  void observe(std::string id, std::string ref, std::string lhs, std::string rhs = {},
               std::string residual = {});

  /// Appends every case of `other`, prefixing ids with "<prefix>.".
  void absorb(const Report& other, std::string_view prefix = {});

  bool passed() const;
  const Case* first_failure() const;
  const Case* find(std::string_view id) const;

  double wall_seconds = 0.0;

 private:
  std::string suite_;
  std::vector<Case> cases_;
};

enum class Format { json, csv, text };

Format parse_format(std::string_view name);

/// Serializes suites in the given order. Timing is left out unless asked
/// for, so identical inputs give byte-identical output.
std::string render(std::span<const Report> reports, Format format, bool with_timing = false);

std::string to_json(std::span<const Report> reports, bool with_timing = false);

}  // namespace trio
