#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "trio/report.hpp"

namespace trio::cli {

/// Flat rows of preformatted strings, rendered as JSON {meta..., rows: [...]},
/// CSV with a header line, or aligned text.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

std::string render_table(const Table& table, Format format);

/// Writes `text` to `path`, or stdout when `path` is empty; a missing final
/// newline is added.
void emit(const std::string& text, const std::string& path);

}  // namespace trio::cli
