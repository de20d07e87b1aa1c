#pragma once

// Text and JSON formats for patterns and families.
//
// Pattern text:
//   dims: <n_1> ... <n_d>
//   ones:
//   <x_1> ... <x_d>      (one line per 1-entry, 1-based)
//
// Family JSON: {"d": int, "patterns": [{"dims": [...], "ones": [[...], ...]}, ...]}

#include "json.hpp"
#include <stdexcept>
#include <string>

#include "mpat/family.hpp"
#include "mpat/tensor.hpp"

namespace mpat {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Tensor01 parse_pattern(const std::string& text);
/// Canonical text; ones in lexicographic order.
std::string serialize_pattern(const Tensor01& t);

nlohmann::json tensor_to_json(const Tensor01& t);
Tensor01 tensor_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const Family& fam);
Family family_from_json(const nlohmann::json& j);

/// Hex SHA-256 of the canonical family JSON.
std::string family_hash(const Family& fam);

/// Reads a family from a file: ".json" files hold a family, anything else is
/// a single pattern in text form.
Family load_family(const std::string& path);
Tensor01 load_pattern(const std::string& path);

}  // namespace mpat
