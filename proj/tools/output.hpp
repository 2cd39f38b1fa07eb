#pragma once

// Deterministic text output: every floating-point value is written in
// scientific notation with 9 significant digits.

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cvqkd::cli {

std::string format_double(double value);

// RFC-4180 field: quoted only when it contains a comma, quote or line break.
std::string csv_field(std::string_view text);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);

  CsvWriter& operator<<(double value);
  CsvWriter& operator<<(std::string_view text);
  CsvWriter& operator<<(bool flag);
  void end_row();

 private:
  std::ostream& out_;
  std::size_t columns_;
  std::vector<std::string> row_;
};

// Serializes like nlohmann::json::dump(2) except that floats use format_double.
void write_json(std::ostream& out, const nlohmann::json& value, int indent = 0);

}  // namespace cvqkd::cli
