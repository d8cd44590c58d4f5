#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orpoly::report {

using Json = nlohmann::ordered_json;

/// Version tag written into every record; bump on incompatible changes.
inline constexpr const char* kSchema = "orpoly.report/1";

enum class Format { json, csv };

Format parse_format(std::string_view name);

/// Flattens nested objects into dotted keys in document order. Arrays are
/// kept as a single cell holding their compact JSON text.
std::vector<std::pair<std::string, std::string>> flatten(const Json& record);

/// Writes records as JSON lines, or as CSV with a header taken from the first
/// record. Both encodings render each scalar with the same text.
class Sink {
 public:
  Sink(Format format, std::ostream& out) : format_(format), out_(out) {}

  void write(const Json& record);

 private:
  Format format_;
  std::ostream& out_;
  std::vector<std::string> header_;
};

}  // namespace orpoly::report
