#pragma once

#include <functional>
#include <vector>

#include "qumond/convolution.hpp"
#include "qumond/grid.hpp"
#include "qumond/helmholtz.hpp"
#include "qumond/singular.hpp"

namespace qumond::mond {

/// MOND interpolation function with its admissibility data: lambda, its
/// derivative, the bound constant Lambda with lambda(s) <= Lambda/sqrt(s),
/// and the critical acceleration a0 (1 in code units).
struct InterpolationFunction {
  std::function<double(double)> lambda;
  std::function<double(double)> lambda_prime;
  double big_lambda = 1.0;
  double a0 = 1.0;
  bool deep_mond = false;  // lambda(s) = sqrt(a0/s) exactly

  /// tilde(s) = lambda(s) s, extended by 0 at s = 0.
  double tilde(double sigma) const { return sigma > 0.0 ? lambda(sigma) * sigma : 0.0; }
  double tilde_prime(double sigma) const {
    return sigma > 0.0 ? lambda_prime(sigma) * sigma + lambda(sigma) : 0.0;
  }

  /// Scans lambda over 12 decades around a0 for the admissibility bounds:
  /// lambda <= Lambda/sqrt(s), -Lambda/(2 s^{3/2}) <= lambda' <= 0, and
  /// decay at large s. Throws DiagnosticError on violation.
  void validate() const;
};

/// Deep-MOND form lambda(s) = sqrt(a0/s), Lambda = sqrt(a0).
InterpolationFunction lambda_deep_mond(double a0);

/// |lambda(|u|)u - lambda(|v|)v| / |u - v|^{1/2}; 0 when u = v.
double holder_vector_check(const InterpolationFunction& lam, const Vec3& u, const Vec3& v);

/// Pointwise lambda(|g|) g, zero where g = 0.
VectorGrid phantom_field(const VectorGrid& grad_un, const InterpolationFunction& lam);

/// grad U^M = grad U^N + H(lambda(|grad U^N|) grad U^N).
VectorGrid mond_field(FreeSpaceConvolver& conv, const ScalarGrid& rho,
                      const InterpolationFunction& lam, const singular::EpsilonSchedule& sched);

/// Milgrom's anchored-kernel potential
///   U(x) = (1/4 pi) int w(y) . ((x-y)/|x-y|^3 + y/|y|^3) dy,
/// w = lambda(|grad U^N|) grad U^N, quadratured over grid cells; the cell
/// containing x contributes zero to the first term (odd-kernel self rule).
std::vector<double> milgrom_potential(FreeSpaceConvolver& conv, const ScalarGrid& rho,
                                      const InterpolationFunction& lam,
                                      const std::vector<Vec3>& points);

/// Per test function: relative gap between int grad U^M . grad phi and
/// int (grad U^N + phantom) . grad phi.
std::vector<double> weak_pde_residual(FreeSpaceConvolver& conv, const ScalarGrid& rho,
                                      const InterpolationFunction& lam,
                                      const std::vector<ScalarGrid>& testfns,
                                      const singular::EpsilonSchedule& sched);

}  // namespace qumond::mond
