#ifndef KWISE_RECORD_HPP
#define KWISE_RECORD_HPP

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace kwise {

// One machine-readable result: key/value pairs in insertion order,
// serializable to a JSON object and to a CSV header+row carrying the
// same values. Scalar formatting is shared between the two so a value
// parsed back from either form is identical.
class OutputRecord {
 public:
  using json = nlohmann::ordered_json;

  void set(const std::string& key, bool value) { data_[key] = value; }
  void set(const std::string& key, std::int64_t value) { data_[key] = value; }
  void set(const std::string& key, std::uint64_t value) { data_[key] = value; }
  void set(const std::string& key, int value) { data_[key] = value; }
  void set(const std::string& key, unsigned value) { data_[key] = value; }
  void set(const std::string& key, double value) { data_[key] = value; }
  void set(const std::string& key, const std::string& value) { data_[key] = value; }
  void set(const std::string& key, const char* value) { data_[key] = value; }
  void set(const std::string& key, json value) { data_[key] = std::move(value); }

  const json& data() const { return data_; }
  json& data() { return data_; }

  std::string to_json_string(int indent = 2) const { return data_.dump(indent); }
  static OutputRecord from_json_string(const std::string& text);

  // RFC-4180-style: quoted only when needed, '.' decimal separator.
  std::string csv_header() const;
  std::string csv_row() const;

  friend bool operator==(const OutputRecord& a, const OutputRecord& b) {
    return a.data_ == b.data_;
  }

 private:
  json data_ = json::object();
};

std::string csv_escape(const std::string& field);

}  // namespace kwise

#endif  // KWISE_RECORD_HPP
