#pragma once

#include "qumond/grid.hpp"

namespace qumond::reference {

// Serial direct-sum counterparts of the spectral solvers. O(N^2) in the
// cell count -- only usable at small n, kept as ground truth for the FFT
// path and as the baseline in the benchmark.

ScalarGrid potential_direct(const ScalarGrid& g);
VectorGrid field_direct(const ScalarGrid& g);
ScalarGrid tij_eps_direct(const ScalarGrid& g, int i, int j, double eps);

// Serial single-loop quadrature and stencils (same formulas as the
// parallel versions in grid.cpp).
double integrate_serial(const ScalarGrid& g);
VectorGrid gradient_fd_serial(const ScalarGrid& u);

}  // namespace qumond::reference
