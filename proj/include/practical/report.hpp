#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace practical {

// Machine-readable result of one CLI invocation. Rows carry the data; the
// metadata block (parameters, wall time) is excluded from determinism
// comparisons.
struct Report {
  std::string schema;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
  std::vector<nlohmann::ordered_json> rows;

  std::string to_json() const;

  // Header + data rows. Nested objects flatten to dotted columns, arrays
  // join with ';', reals print with 15 significant digits.
  std::string to_csv() const;

  // Rows only, for byte-identity comparisons across worker counts.
  std::string rows_json() const;
};

}  // namespace practical
