#include "kwise/record.hpp"

namespace kwise {

OutputRecord OutputRecord::from_json_string(const std::string& text) {
  OutputRecord record;
  record.data_ = json::parse(text);
  return record;
}

std::string csv_escape(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string scalar_to_string(const nlohmann::ordered_json& value) {
  if (value.is_string()) return value.get<std::string>();
  // dump() renders numbers exactly as the JSON serializer does, so CSV
  // and JSON carry identical values.
  return value.dump();
}

}  // namespace

std::string OutputRecord::csv_header() const {
  std::string out;
  bool first = true;
  for (auto it = data_.begin(); it != data_.end(); ++it) {
    if (!first) out += ',';
    out += csv_escape(it.key());
    first = false;
  }
  return out;
}

std::string OutputRecord::csv_row() const {
  std::string out;
  bool first = true;
  for (auto it = data_.begin(); it != data_.end(); ++it) {
    if (!first) out += ',';
    out += csv_escape(scalar_to_string(it.value()));
    first = false;
  }
  return out;
}

}  // namespace kwise
