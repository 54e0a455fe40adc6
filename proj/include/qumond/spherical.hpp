#pragma once

#include <functional>

#include "qumond/mond.hpp"
#include "qumond/radial.hpp"

namespace qumond::spherical {

/// Spherically symmetric density with its enclosed mass M(r). Either built
/// from a sampled profile (trapezoidal cumulative mass, linear interpolation)
/// or carried as analytic callables for exact constructions.
struct SphericalModel {
  std::function<double(double)> rho;   // density at radius r
  std::function<double(double)> mass;  // enclosed mass M(r)
  double total_mass = 0.0;
  double support_radius = 0.0;  // rho = 0 beyond this radius

  static SphericalModel from_profile(const RadialProfile& rho_profile);
};

/// Trapezoidal cumulative quadrature of 4 pi r^2 rho on the profile mesh.
RadialProfile cumulative_mass(const RadialProfile& rho);

/// Shell theorem: radial field magnitude M(r)/r^2.
double newtonian_field_spherical(const SphericalModel& model, double r);

/// 2 pi r^2 rho / sqrt(M) where M > 0, else 0.
double sqrt_mass_derivative(const SphericalModel& model, double r);

/// div(grad U^M) at radius r. Deep-MOND fast path:
///   4 pi rho + sqrt(M)/r^2 + sqrt(M)'/r   (scaled by sqrt(a0)),
/// general lambda via the tilde-lambda chain rule.
double mond_laplacian(const SphericalModel& model, const mond::InterpolationFunction& lam,
                      double r);

/// v(r) = sqrt(r (M/r^2 + tilde_lambda(M/r^2))); newton_only drops the
/// MOND correction.
double circular_velocity(const SphericalModel& model, const mond::InterpolationFunction& lam,
                         double r, bool newton_only = false);

/// (4 pi int_0^R r^2 |f|^q dr)^{1/q} by trapezoid on the profile mesh.
double lq_norm_radial(const RadialProfile& f, double q, double R);

}  // namespace qumond::spherical
