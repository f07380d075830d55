#include "output.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trio/errors.hpp"

namespace trio::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string render_table(const Table& table, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json doc = table.meta;
      auto& rows = doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c]] = row.at(c);
        rows.push_back(std::move(obj));
      }
      out << doc.dump(2);
      break;
    }
    case Format::csv: {
      for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << csv_field(table.columns[c]);
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
        out << '\n';
      }
      break;
    }
    case Format::text: {
      for (const auto& [key, value] : table.meta.items()) {
        out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t c = 0; c < width.size(); ++c) {
        width[c] = table.columns[c].size();
        for (const auto& row : table.rows) width[c] = std::max(width[c], row[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out << (c ? "  " : "") << cells[c];
          if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size(), ' ');
        }
        out << '\n';
      };
      line(table.columns);
      for (const auto& row : table.rows) line(row);
      break;
    }
  }
  return out.str();
}

void emit(const std::string& text, const std::string& path) {
  const bool newline = !text.empty() && text.back() != '\n';
  if (path.empty()) {
    std::cout << text << (newline ? "\n" : "");
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file: " + path);
  file << text << (newline ? "\n" : "");
}

}  // namespace trio::cli
