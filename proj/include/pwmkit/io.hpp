#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pwmkit {

// 17 significant digits: enough to round-trip any double exactly, so a
// parsed-back CSV or JSON reproduces the computed values bit for bit.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_text_file(const std::filesystem::path& path,
                            std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

// CSV with a mandatory header row and LF line endings.
inline std::string csv_table(std::span<const std::string> columns,
                             std::span<const std::vector<double>> rows) {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c > 0) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_g17(row[c]);
    }
    out += '\n';
  }
  return out;
}

// Minimal streaming JSON writer with a fixed, deterministic layout. Only
// the constructs the reports need; numbers go out at 17 significant
// digits like the CSVs.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  JsonWriter& begin_object() { return open('{'); }
  JsonWriter& end_object() { return close('}'); }
  JsonWriter& begin_array() { return open('['); }
  JsonWriter& end_array() { return close(']'); }

  JsonWriter& key(std::string_view name) {
    separate();
    append_string(name);
    out_ += ':';
    pending_value_ = true;
    return *this;
  }

  JsonWriter& value(double v) { return primitive(format_g17(v)); }
  JsonWriter& value(int v) { return primitive(std::to_string(v)); }
  JsonWriter& value(long long v) { return primitive(std::to_string(v)); }
  JsonWriter& value(unsigned long long v) { return primitive(std::to_string(v)); }
  JsonWriter& value(bool v) { return primitive(v ? "true" : "false"); }
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& value(std::string_view v) {
    separate_value();
    append_string(v);
    return *this;
  }
  JsonWriter& null() { return primitive("null"); }

 private:
  JsonWriter& open(char c) {
    separate_value();
    out_ += c;
    first_.push_back(true);
    return *this;
  }
  JsonWriter& close(char c) {
    out_ += c;
    first_.pop_back();
    return *this;
  }
  JsonWriter& primitive(std::string_view text) {
    separate_value();
    out_ += text;
    return *this;
  }
  void separate() {
    if (!first_.empty() && !first_.back()) out_ += ',';
    if (!first_.empty()) first_.back() = false;
  }
  void separate_value() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    separate();
  }
  void append_string(std::string_view s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default: out_ += c;
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> first_;
  bool pending_value_ = false;
};

}  // namespace pwmkit
