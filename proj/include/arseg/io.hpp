#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "arseg/core.hpp"
#include "arseg/errors.hpp"

namespace arseg {

// Shortest round-trip-safe decimal rendering used for every number the CLI
// emits (17 significant digits).
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Reads one numeric value per line.  A non-numeric first line is treated as
// a header and skipped; blank lines are ignored; any later non-numeric line
// is an error.
inline std::vector<double> read_values(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t start = 0;
    while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) {
      ++start;
    }
    if (start == line.size()) continue;
    const char* text = line.c_str() + start;
    char* end = nullptr;
    const double v = std::strtod(text, &end);
    if (end == text || *end != '\0') {
      if (values.empty() && line_number == 1) continue;  // header line
      throw errors::parse_error("line " + std::to_string(line_number) +
                                ": expected a numeric value, got \"" +
                                line.substr(start) + "\"");
    }
    values.push_back(v);
  }
  return values;
}

inline Series load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw errors::parse_error("cannot open input file: " + path);
  return validate_series(read_values(in));
}

inline void write_values(std::ostream& out, const std::vector<double>& values) {
  for (double v : values) out << format_double(v) << '\n';
}

// Minimal streaming JSON emitter with stable key order and 17-digit floats.
// Non-finite doubles are emitted as null (JSON has no NaN/Inf).
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  JsonWriter& begin_object() {
    prepare_value();
    os_ << '{';
    stack_.push_back({true, false});
    return *this;
  }

  JsonWriter& end_object() {
    const bool had_items = stack_.back().has_items;
    stack_.pop_back();
    if (had_items) newline_indent();
    os_ << '}';
    return *this;
  }

  JsonWriter& begin_array() {
    prepare_value();
    os_ << '[';
    stack_.push_back({false, false});
    return *this;
  }

  JsonWriter& end_array() {
    const bool had_items = stack_.back().has_items;
    stack_.pop_back();
    if (had_items) newline_indent();
    os_ << ']';
    return *this;
  }

  JsonWriter& key(std::string_view name) {
    separate();
    write_string(name);
    os_ << ": ";
    pending_key_ = true;
    return *this;
  }

  JsonWriter& value(double v) {
    prepare_value();
    if (std::isfinite(v)) {
      os_ << format_double(v);
    } else {
      os_ << "null";
    }
    return *this;
  }

  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }

  JsonWriter& value(long long v) {
    prepare_value();
    os_ << v;
    return *this;
  }

  JsonWriter& value(std::uint64_t v) {
    prepare_value();
    os_ << v;
    return *this;
  }

  JsonWriter& value(bool v) {
    prepare_value();
    os_ << (v ? "true" : "false");
    return *this;
  }

  JsonWriter& value(std::string_view v) {
    prepare_value();
    write_string(v);
    return *this;
  }

  // Without this overload a string literal would prefer the bool conversion.
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }

  JsonWriter& null_value() {
    prepare_value();
    os_ << "null";
    return *this;
  }

  template <typename T>
  JsonWriter& kv(std::string_view name, T v) {
    key(name);
    return value(v);
  }

  JsonWriter& finish() {
    os_ << '\n';
    return *this;
  }

 private:
  struct Frame {
    bool is_object;
    bool has_items;
  };

  void separate() {
    if (!stack_.empty()) {
      if (stack_.back().has_items) os_ << ',';
      stack_.back().has_items = true;
      newline_indent();
    }
  }

  void prepare_value() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (!stack_.empty() && !stack_.back().is_object) separate();
  }

  void newline_indent() {
    os_ << '\n';
    for (std::size_t i = 0; i < stack_.size(); ++i) os_ << "  ";
  }

  void write_string(std::string_view s) {
    os_ << '"';
    for (char c : s) {
      switch (c) {
        case '"': os_ << "\\\""; break;
        case '\\': os_ << "\\\\"; break;
        case '\n': os_ << "\\n"; break;
        case '\r': os_ << "\\r"; break;
        case '\t': os_ << "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            os_ << buf;
          } else {
            os_ << c;
          }
      }
    }
    os_ << '"';
  }

  std::ostream& os_;
  std::vector<Frame> stack_;
  bool pending_key_ = false;
};

}  // namespace arseg
