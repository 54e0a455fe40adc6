#pragma once

#include <vector>

#include "qumond/convolution.hpp"
#include "qumond/grid.hpp"

namespace qumond::singular {

/// Calderon-Zygmund angular kernel 3 x_i x_j / |x|^2 - delta_ij (i, j in 0..2).
double omega(int i, int j, double x, double y, double z);

/// Decreasing truncation radii for the eps -> 0 limit, with optional
/// Richardson extrapolation in eps^2.
struct EpsilonSchedule {
  std::vector<double> eps;      // strictly decreasing, smallest >= h
  bool richardson = true;
  double tolerance = 0.25;      // max relative change between the last two levels

  void validate(double h) const;

  /// Default geometric schedule {4h, 2h, h}.  Coarser schedules put the
  /// largest level outside the eps^2 regime for band-limited inputs and the
  /// extrapolation stalls near 5% relative error; this one reaches ~0.2%
  /// against the spectral multiplier.
  static EpsilonSchedule geometric(double h);
};

/// Truncated operator: convolution of g against the second-derivative kernel
/// of -1/|x| zeroed inside the eps-ball.
ScalarGrid t_ij_eps(FreeSpaceConvolver& conv, const ScalarGrid& g, int i, int j, double eps);

/// eps -> 0 limit over the schedule (Richardson in eps^2 when enabled).
/// Throws DiagnosticError when the extrapolation does not settle within the
/// schedule tolerance.
ScalarGrid t_ij(FreeSpaceConvolver& conv, const ScalarGrid& g, int i, int j,
                const EpsilonSchedule& sched);

}  // namespace qumond::singular
