#include "decaylab/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace decaylab {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& os, const Table& table) {
  if (table.index.size() != table.value.size()) throw std::invalid_argument("write_csv: column length mismatch");
  const bool with_point = table.point_at_infinity || !table.point.empty();
  if (!table.point_at_infinity && with_point && table.point.size() != table.index.size()) {
    throw std::invalid_argument("write_csv: point column length mismatch");
  }
  os << "index,value";
  if (with_point) os << ",attaining_point_re,attaining_point_im";
  os << '\n';
  for (std::size_t i = 0; i < table.index.size(); ++i) {
    os << format_double(table.index[i]) << ',' << format_double(table.value[i]);
    if (table.point_at_infinity) {
      os << ",inf,inf";
    } else if (with_point) {
      os << ',' << format_double(table.point[i].re()) << ',' << format_double(table.point[i].im());
    }
    os << '\n';
  }
}

namespace {

double parse_field(const std::string& s) {
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  if (s == "nan") return NAN;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::runtime_error("read_csv: bad number '" + s + "'");
  return v;
}

}  // namespace

Table read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: missing header");
  bool with_point = false;
  if (line == "index,value,attaining_point_re,attaining_point_im") {
    with_point = true;
  } else if (line != "index,value") {
    throw std::runtime_error("read_csv: unexpected header '" + line + "'");
  }
  Table t;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != (with_point ? 4u : 2u)) throw std::runtime_error("read_csv: wrong field count");
    try {
      t.index.push_back(parse_field(f[0]));
      t.value.push_back(parse_field(f[1]));
      if (with_point) {
        if (f[2] == "inf") {
          t.point_at_infinity = true;
        } else {
          t.point.emplace_back(parse_field(f[2]), parse_field(f[3]));
        }
      }
    } catch (const std::logic_error&) {
      throw std::runtime_error("read_csv: bad row '" + line + "'");
    }
  }
  return t;
}

}  // namespace decaylab
