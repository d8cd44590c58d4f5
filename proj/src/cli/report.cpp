#include "orpoly/report.hpp"

#include <stdexcept>

namespace orpoly::report {

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

namespace {

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  return value.dump();
}

void flatten_into(const Json& node, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (node.is_object()) {
    for (const auto& [key, child] : node.items()) {
      flatten_into(child, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out.emplace_back(prefix, node.is_array() ? node.dump() : scalar_text(node));
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten(const Json& record) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(record, "", out);
  return out;
}

void Sink::write(const Json& record) {
  if (format_ == Format::json) {
    out_ << record.dump() << '\n';
    return;
  }
  const auto cells = flatten(record);
  if (header_.empty()) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      header_.push_back(cells[i].first);
      out_ << (i ? "," : "") << csv_cell(cells[i].first);
    }
    out_ << '\n';
  }
  // Columns follow the header; keys missing from this record stay empty.
  for (std::size_t i = 0; i < header_.size(); ++i) {
    std::string text;
    for (const auto& [key, value] : cells) {
      if (key == header_[i]) {
        text = value;
        break;
      }
    }
    out_ << (i ? "," : "") << csv_cell(text);
  }
  out_ << '\n';
}

}  // namespace orpoly::report
