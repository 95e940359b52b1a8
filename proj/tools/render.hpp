#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "harbourne/document.hpp"

// Turns a command's JSON output into aligned text tables or CSV. Every value
// shown comes from the same JSON tree, so the three formats agree exactly.

namespace harbourne::cli {

enum class Format { table, json, csv };

struct Section {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

/// Compact one-cell rendering of a nested value: {"2": 54, "3": 1} -> "2:54 3:1".
inline std::string cell_text(const Json& v) {
  if (v.is_object()) {
    std::string out;
    for (const auto& [key, value] : v.items()) {
      if (!out.empty()) out += ' ';
      out += key + ":" + cell_text(value);
    }
    return out.empty() ? "-" : out;
  }
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += ", ";
      out += cell_text(item);
    }
    return out.empty() ? "-" : out;
  }
  return scalar_text(v);
}

inline bool is_object_array(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
}

inline void flatten(const Json& obj, const std::string& prefix, Section& fields, std::vector<Section>& tables) {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object() && !value.empty()) {
      flatten(value, name, fields, tables);
    } else if (is_object_array(value)) {
      Section table{name, {}, {}};
      for (const auto& row : value) {
        for (const auto& [column, cell] : row.items()) {
          if (std::find(table.header.begin(), table.header.end(), column) == table.header.end()) {
            table.header.push_back(column);
          }
        }
      }
      for (const auto& row : value) {
        std::vector<std::string> cells;
        for (const auto& column : table.header) cells.push_back(row.contains(column) ? cell_text(row[column]) : "");
        table.rows.push_back(std::move(cells));
      }
      tables.push_back(std::move(table));
    } else {
      fields.rows.push_back({name, cell_text(value)});
    }
  }
}

inline std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::vector<Section> sections(const Json& output) {
  Section fields{"", {"field", "value"}, {}};
  std::vector<Section> tables;
  detail::flatten(output, "", fields, tables);
  std::vector<Section> out;
  if (!fields.rows.empty()) out.push_back(std::move(fields));
  for (auto& t : tables) out.push_back(std::move(t));
  return out;
}

inline void write_table(std::ostream& os, const std::vector<Section>& parts) {
  bool first = true;
  for (const auto& part : parts) {
    if (!first) os << '\n';
    first = false;
    if (!part.title.empty()) os << "[" << part.title << "]\n";
    std::vector<std::size_t> width(part.header.size(), 0);
    for (std::size_t c = 0; c < part.header.size(); ++c) width[c] = part.header[c].size();
    for (const auto& row : part.rows) {
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) text += "  ";
        text += cells[c];
        if (c + 1 < cells.size()) text.append(width[c] - cells[c].size(), ' ');
      }
      os << text << '\n';
    };
    line(part.header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : part.rows) line(row);
  }
}

inline void write_csv(std::ostream& os, const std::vector<Section>& parts) {
  bool first = true;
  for (const auto& part : parts) {
    if (!first) os << '\n';
    first = false;
    std::vector<std::string> header = part.header;
    if (!part.title.empty()) header.insert(header.begin(), "section");
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << detail::csv_field(cells[c]);
      os << '\n';
    };
    line(header);
    for (auto row : part.rows) {
      if (!part.title.empty()) row.insert(row.begin(), part.title);
      line(row);
    }
  }
}

inline void write_output(std::ostream& os, const Json& output, Format format) {
  switch (format) {
    case Format::json:
      os << output.dump(2) << '\n';
      break;
    case Format::csv:
      write_csv(os, sections(output));
      break;
    case Format::table:
      write_table(os, sections(output));
      break;
  }
}

}  // namespace harbourne::cli
