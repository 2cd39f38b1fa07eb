#include "output.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace cvqkd::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.8e}", value);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header)
    : out_(out), columns_(header.size()) {
  for (auto name : header) row_.push_back(csv_field(name));
  end_row();
}

CsvWriter& CsvWriter::operator<<(double value) {
  row_.push_back(format_double(value));
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::string_view text) {
  row_.push_back(csv_field(text));
  return *this;
}

CsvWriter& CsvWriter::operator<<(bool flag) {
  row_.emplace_back(flag ? "true" : "false");
  return *this;
}

void CsvWriter::end_row() {
  if (row_.size() != columns_) throw std::logic_error("CsvWriter: row width mismatch");
  for (std::size_t i = 0; i < row_.size(); ++i) {
    if (i) out_ << ',';
    out_ << row_[i];
  }
  out_ << "\r\n";
  row_.clear();
}

void write_json(std::ostream& out, const nlohmann::json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (value.type()) {
    case nlohmann::json::value_t::object: {
      if (value.empty()) {
        out << "{}";
        break;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << nlohmann::json(key).dump() << ": ";
        write_json(out, item, indent + 2);
      }
      out << '\n' << close_pad << '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      if (value.empty()) {
        out << "[]";
        break;
      }
      out << "[\n";
      bool first = true;
      for (const auto& item : value) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        write_json(out, item, indent + 2);
      }
      out << '\n' << close_pad << ']';
      break;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = value.get<double>();
      // JSON has no literal for non-finite numbers
      if (std::isfinite(x)) {
        out << format_double(x);
      } else {
        out << "null";
      }
      break;
    }
    default:
      out << value.dump();
  }
  if (indent == 0) out << '\n';
}

}  // namespace cvqkd::cli
