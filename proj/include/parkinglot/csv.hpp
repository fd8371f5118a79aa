#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace parkinglot {

inline std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Minimal RFC-4180-style writer: cells containing comma, quote, or newline
// are quoted with internal quotes doubled; rows end with \n. Output bytes
// are a pure function of the cell strings.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path)
      : out_(path, std::ios::binary | std::ios::trunc) {}

  bool ok() const { return out_.good(); }

  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << quoted(cells[i]);
    }
    out_ << '\n';
  }

 private:
  static std::string quoted(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    q += '"';
    return q;
  }

  std::ofstream out_;
};

}  // namespace parkinglot
