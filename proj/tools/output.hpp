#pragma once

#include "ringcodes/serialize.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace ringcodes::cli {

enum class Format { json, csv };

struct GlobalOptions {
  std::string format = "json";
  bool timestamps = false;
  unsigned workers = 1;
  std::optional<std::uint64_t> seed;

  Format fmt() const { return format == "csv" ? Format::csv : Format::json; }
};

/// Bad command-line input: reported on stderr with exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_value(const Json& v) {
  if (v.is_string()) return csv_field(v.get<std::string>());
  if (v.is_null()) return "";
  return csv_field(v.dump());
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<Json> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << csv_field(header_[i]);
    os << '\n';
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_value(r[i]);
      os << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Json>> rows_;
};

inline Table matrix_table(const Json& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<std::string> header;
  for (std::size_t j = 0; j < cols; ++j) header.push_back("c" + std::to_string(j));
  Table t(header);
  for (const auto& r : rows) t.add(std::vector<Json>(r.begin(), r.end()));
  return t;
}

inline Json stamp(Json doc, const GlobalOptions& g) {
  if (g.timestamps && doc.is_object()) doc["generated_at"] = utc_now();
  return doc;
}

inline void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

}  // namespace ringcodes::cli
