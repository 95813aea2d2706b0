#include "practical/report.hpp"

#include <algorithm>
#include <cstdio>

namespace practical {

namespace {

using nlohmann::ordered_json;

std::string format_scalar(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v.get<double>());
    return buf;
  }
  if (v.is_number()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const std::string& prefix, const ordered_json& v,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, sub] : v.items())
      flatten(prefix.empty() ? k : prefix + "." + k, sub, out);
  } else if (v.is_array()) {
    std::string joined;
    for (const auto& e : v) {
      if (!joined.empty()) joined += ';';
      joined += format_scalar(e);
    }
    out.emplace_back(prefix, joined);
  } else {
    out.emplace_back(prefix, format_scalar(v));
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

}  // namespace

std::string Report::to_json() const {
  ordered_json doc;
  doc["schema"] = schema;
  doc["metadata"] = metadata;
  doc["rows"] = rows;
  return doc.dump(2);
}

std::string Report::rows_json() const {
  return ordered_json(rows).dump();
}

std::string Report::to_csv() const {
  // Column order: first appearance across all rows; a row missing a column
  // (e.g. an absent witness) leaves the cell empty.
  std::vector<std::string> columns;
  std::vector<std::vector<std::pair<std::string, std::string>>> flat(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    flatten("", rows[i], flat[i]);
    for (const auto& [k, _] : flat[i])
      if (std::find(columns.begin(), columns.end(), k) == columns.end())
        columns.push_back(k);
  }
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(columns[c]);
  }
  out += '\n';
  for (const auto& row : flat) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      for (const auto& [k, v] : row)
        if (k == columns[c]) {
          out += csv_escape(v);
          break;
        }
    }
    out += '\n';
  }
  return out;
}

}  // namespace practical
