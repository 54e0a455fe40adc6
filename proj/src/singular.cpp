#include "qumond/singular.hpp"

#include <cmath>
#include <stdexcept>

namespace qumond::singular {

double omega(int i, int j, double x, double y, double z) {
  if (i < 0 || i > 2 || j < 0 || j > 2) throw std::invalid_argument("omega: indices in 0..2");
  const double r2 = x * x + y * y + z * z;
  if (r2 == 0.0) throw std::invalid_argument("omega: x must be nonzero");
  const double c[3] = {x, y, z};
  return 3.0 * c[i] * c[j] / r2 - (i == j ? 1.0 : 0.0);
}

void EpsilonSchedule::validate(double h) const {
  if (eps.empty()) throw std::invalid_argument("EpsilonSchedule: empty");
  double prev = std::numeric_limits<double>::infinity();
  for (double e : eps) {
    if (!(e < prev)) throw std::invalid_argument("EpsilonSchedule: eps must be strictly decreasing");
    prev = e;
  }
  if (eps.back() < h) throw std::invalid_argument("EpsilonSchedule: smallest eps below grid spacing");
}

EpsilonSchedule EpsilonSchedule::geometric(double h) {
  EpsilonSchedule s;
  s.eps = {4.0 * h, 2.0 * h, 1.0 * h};
  return s;
}

ScalarGrid t_ij_eps(FreeSpaceConvolver& conv, const ScalarGrid& g, int i, int j, double eps) {
  return conv.tij_eps(g, i, j, eps);
}

ScalarGrid t_ij(FreeSpaceConvolver& conv, const ScalarGrid& g, int i, int j,
                const EpsilonSchedule& sched) {
  sched.validate(conv.spacing());
  const std::size_t levels = sched.eps.size();
  std::vector<ScalarGrid> row;  // current Neville column, per level
  row.reserve(levels);
  for (double e : sched.eps) row.push_back(conv.tij_eps(g, i, j, e));
  if (!sched.richardson || levels == 1) return row.back();

  // Neville extrapolation to eps^2 = 0, assuming an even-power error series.
  std::vector<double> t(levels);
  for (std::size_t k = 0; k < levels; ++k) t[k] = sched.eps[k] * sched.eps[k];
  ScalarGrid prev_diag = row.back();
  for (std::size_t col = 1; col < levels; ++col) {
    for (std::size_t k = levels - 1; k >= col; --k) {
      const double t_hi = t[k - col], t_lo = t[k];
      const double w_lo = t_hi / (t_hi - t_lo), w_hi = -t_lo / (t_hi - t_lo);
      ScalarGrid next = row[k];
      next *= w_lo;
      next += w_hi * row[k - 1];
      row[k] = std::move(next);
    }
    // extrapolant over the finest levels-1 radii, for the settling check
    if (col == levels - 2) prev_diag = row.back();
  }
  const ScalarGrid& limit = row.back();
  const double denom = l2_norm(limit);
  if (denom > 0.0) {
    const double change = l2_norm(limit - prev_diag) / denom;
    if (change > sched.tolerance)
      throw DiagnosticError("t_ij: extrapolation not settled (relative change " +
                            std::to_string(change) + " > tolerance " +
                            std::to_string(sched.tolerance) + ")");
  }
  return limit;
}

}  // namespace qumond::singular
