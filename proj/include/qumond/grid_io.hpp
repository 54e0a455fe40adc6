#pragma once

#include <iosfwd>
#include <string>

#include "qumond/grid.hpp"

namespace qumond {

// Dump format: one header line
//   SCALARGRID n=<int> L=<float> layout=x-fastest encoding=f64le [component=1..3]
// followed by n^3 little-endian IEEE-754 doubles. A VectorGrid is three
// consecutive blocks tagged component=1..3.

void write_grid(std::ostream& out, const ScalarGrid& g, int component = 0);
void write_grid(const std::string& path, const ScalarGrid& g);
void write_grid(const std::string& path, const VectorGrid& v);

ScalarGrid read_scalar_grid(std::istream& in);
ScalarGrid read_scalar_grid(const std::string& path);
VectorGrid read_vector_grid(std::istream& in);
VectorGrid read_vector_grid(const std::string& path);

}  // namespace qumond
