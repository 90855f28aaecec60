#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "decaylab/complex_value.hpp"

namespace decaylab {

/// One output table: CSV columns index,value[,attaining_point_re,attaining_point_im].
struct Table {
  std::string name;
  std::vector<double> index;
  std::vector<double> value;
  std::vector<ComplexValue> point;  // empty, or one per row
  bool point_at_infinity = false;   // the supremum is a limit along the model; points print as "inf"
};

/// %.17g, with "inf"/"-inf"/"nan" spelled out.
std::string format_double(double x);

void write_csv(std::ostream& os, const Table& table);
/// Inverse of write_csv (name is left empty). Throws std::runtime_error on malformed input.
Table read_csv(std::istream& is);

}  // namespace decaylab
