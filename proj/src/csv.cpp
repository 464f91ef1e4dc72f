#include "symspace/csv.hpp"

#include <cstdio>
#include <fstream>

#include "symspace/error.hpp"

namespace symspace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) out += (i ? "," : "") + t.header[i];
  out += '\n';
  for (const auto& r : t.rows) {
    if (r.size() != t.header.size()) throw InconsistentInputError("to_csv: row width differs from header");
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + format_double(r[i]);
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, const Table& t) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("write_csv: cannot open " + path);
  f << to_csv(t);
}

}  // namespace symspace
