#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ladderlab {

/// %.17g, or `null` for NaN and infinities.
std::string json_number(double x);
std::string json_string(std::string_view s);

/// Ordered key/value metadata. Values are emitted as JSON strings.
using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string format_g17(double x);

/// Minimal streaming JSON writer with caller-fixed key order.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(std::string_view k);
  void value(double x);
  void value(long long x);
  void value(int x) { value(static_cast<long long>(x)); }
  void value(std::string_view s);
  void value(const char* s) { value(std::string_view(s)); }
  void value_bool(bool b);
  void null();
  void metadata(const Metadata& meta);

 private:
  void separate();
  void indent();

  std::ostream& out_;
  std::vector<bool> first_;  // one flag per open container
  bool after_key_ = false;
};

}  // namespace ladderlab
