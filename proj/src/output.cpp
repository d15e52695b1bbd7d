#include <cstdio>
#include <ostream>

#include "artinff/cli.hpp"

namespace artinff::cli {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

bool needs_quoting(const std::string& s) {
  for (char c : s)
    if (c == ',' || c == '"' || c == '\n') return true;
  return false;
}

std::string csv_cell(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += "\"";
  return out;
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  for (size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << csv_cell(t.columns[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_cell(row[i]);
    os << "\n";
  }
}

// Cells stay strings so the JSON mirrors the CSV byte for byte.
void write_json(const Table& t, std::ostream& os) {
  os << "{\n  \"columns\": [";
  for (size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? ", " : "") << json_string(t.columns[i]);
  os << "],\n  \"rows\": [\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    os << "    [";
    for (size_t i = 0; i < t.rows[r].size(); ++i)
      os << (i ? ", " : "") << json_string(t.rows[r][i]);
    os << "]" << (r + 1 < t.rows.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
}

void write_plotdata(const Table& t, std::ostream& os) {
  os << "#";
  for (const auto& c : t.columns) os << " " << c;
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
}

}  // namespace artinff::cli
