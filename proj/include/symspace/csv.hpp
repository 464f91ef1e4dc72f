#pragma once

#include <string>
#include <vector>

namespace symspace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Round-trippable decimal form, 17 significant digits.
std::string format_double(double v);
std::string to_csv(const Table& t);
void write_csv(const std::string& path, const Table& t);

}  // namespace symspace
