#include "ladderlab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace ladderlab {

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_number(double x) { return std::isfinite(x) ? format_g17(x) : "null"; }

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

void JsonWriter::indent() {
  out_ << '\n';
  for (std::size_t i = 0; i < first_.size(); ++i) out_ << "  ";
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (first_.empty()) return;
  if (!first_.back()) out_ << ',';
  first_.back() = false;
  indent();
}

void JsonWriter::begin_object() {
  separate();
  out_ << '{';
  first_.push_back(true);
}

void JsonWriter::end_object() {
  const bool empty = first_.back();
  first_.pop_back();
  if (!empty) indent();
  out_ << '}';
  if (first_.empty()) out_ << '\n';
}

void JsonWriter::begin_array() {
  separate();
  out_ << '[';
  first_.push_back(true);
}

void JsonWriter::end_array() {
  const bool empty = first_.back();
  first_.pop_back();
  if (!empty) indent();
  out_ << ']';
  if (first_.empty()) out_ << '\n';
}

void JsonWriter::key(std::string_view k) {
  separate();
  out_ << json_string(k) << ": ";
  after_key_ = true;
}

void JsonWriter::value(double x) {
  separate();
  out_ << json_number(x);
}

void JsonWriter::value(long long x) {
  separate();
  out_ << x;
}

void JsonWriter::value(std::string_view s) {
  separate();
  out_ << json_string(s);
}

void JsonWriter::value_bool(bool b) {
  separate();
  out_ << (b ? "true" : "false");
}

void JsonWriter::null() {
  separate();
  out_ << "null";
}

void JsonWriter::metadata(const Metadata& meta) {
  begin_object();
  for (const auto& [k, v] : meta) {
    key(k);
    value(v);
  }
  end_object();
}

}  // namespace ladderlab
