#include <doctest.h>

#include <sstream>

#include "practical/commands.hpp"
#include "practical/report.hpp"

using namespace practical;
using nlohmann::ordered_json;

namespace {

// Split a CSV line, honoring quoted fields.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void check_csv_matches_json(const Report& report) {
  std::istringstream csv(report.to_csv());
  std::string header;
  REQUIRE(std::getline(csv, header));
  const auto columns = split_csv(header);
  for (const auto& row : report.rows) {
    std::string line;
    REQUIRE(std::getline(csv, line));
    const auto cells = split_csv(line);
    REQUIRE(cells.size() == columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      // resolve the dotted column path in the JSON row
      ordered_json v = row;
      std::string path = columns[c];
      bool present = true;
      while (!path.empty()) {
        const auto dot = path.find('.');
        const std::string key = path.substr(0, dot);
        path = dot == std::string::npos ? "" : path.substr(dot + 1);
        if (!v.is_object() || !v.contains(key)) {
          present = false;
          break;
        }
        v = v[key];
      }
      if (!present || v.is_null()) {
        REQUIRE(cells[c].empty());
      } else if (v.is_number_float()) {
        REQUIRE(std::stod(cells[c]) ==
                doctest::Approx(v.get<double>()).epsilon(1e-12));
      } else if (v.is_boolean()) {
        REQUIRE(cells[c] == (v.get<bool>() ? "true" : "false"));
      } else if (v.is_array()) {
        // arrays join with ';'
        std::string joined;
        for (const auto& e : v) {
          if (!joined.empty()) joined += ';';
          joined += e.dump();
        }
        REQUIRE(cells[c] == joined);
      } else if (v.is_string()) {
        REQUIRE(cells[c] == v.get<std::string>());
      } else {
        REQUIRE(cells[c] == v.dump());
      }
    }
  }
}

}  // namespace

TEST_CASE("rows round-trip through the JSON document") {
  const auto res = cmd_classify(10);
  const auto doc = nlohmann::ordered_json::parse(res.report.to_json());
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0] == res.report.rows[0]);
  CHECK(doc["schema"] == "classify");
}

TEST_CASE("CSV carries the same data as JSON") {
  check_csv_matches_json(cmd_classify(10).report);
  check_csv_matches_json(cmd_classify(12).report);
  check_csv_matches_json(cmd_intervals(2, 6, true, 1).report);
  check_csv_matches_json(cmd_constant({10, 100}, 1).report);
  check_csv_matches_json(cmd_short_interval(10000, 0.4872, 9.557, true, 1).report);
  check_csv_matches_json(cmd_verify("wu", 0, 50, 1).report);
}

TEST_CASE("classify rows carry witnesses exactly when a flag is false") {
  const auto yes = cmd_classify(12).report.rows[0];
  CHECK(yes["practical_witness"].is_null());
  CHECK(yes["a_witness"].is_null());
  const auto no = cmd_classify(10).report.rows[0];
  CHECK(no["practical_witness"]["j"] == 2);
  CHECK(no["practical_witness"]["p"] == 5);
  CHECK(no["practical_witness"]["threshold"] == 4);
  const auto half = cmd_classify(6).report.rows[0];
  CHECK(half["practical_witness"].is_null());
  CHECK(half["a_witness"]["threshold"] == 2);
}
