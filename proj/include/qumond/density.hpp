#pragma once

#include <string>
#include <vector>

#include "qumond/grid.hpp"
#include "qumond/radial.hpp"
#include "qumond/spherical.hpp"

namespace qumond::density {

/// Declarative mass distribution: sum of analytic primitives or one of the
/// counterexample constructions. Sampled onto grids / radial profiles on
/// demand.
struct Primitive {
  enum class Kind { UniformBall, Gaussian };
  Kind kind;
  double p0 = 0.0;  // uniform-ball: rho0; gaussian: total mass M
  double p1 = 0.0;  // uniform-ball: radius R; gaussian: sigma
  Vec3 center{0.0, 0.0, 0.0};
};

struct DensityModel {
  enum class Kind { Zero, Primitives, Dyadic, Signed, Profile };
  Kind kind = Kind::Zero;
  std::vector<Primitive> primitives;
  int dyadic_n = 0;   // Kind::Dyadic
  int signed_N = 0;   // Kind::Signed
  RadialProfile profile_data;  // Kind::Profile (external rho(r) file)

  bool is_spherical() const;
  double total_mass() const;
  double support_radius() const;
  double value(const Vec3& x) const;  // pointwise rho(x), no antialiasing

  /// Cell-centered sampling; uniform balls are antialiased by 4^3
  /// subsampling of boundary cells.
  ScalarGrid sample_grid(int n, double half_width) const;

  /// rho(r) on the given mesh; requires is_spherical().
  RadialProfile sample_profile(const std::vector<double>& radii) const;

  /// Analytic (or exactly accumulated) spherical model; requires
  /// is_spherical().
  spherical::SphericalModel spherical_model() const;
};

/// Parses specs like "uniform-ball:1,0.5", "gaussian:1,0.2,0.3,0,0",
/// "dyadic:8", "signed:100", "zero", "profile:rho.csv", and sums of
/// primitives joined with '+'. Throws std::invalid_argument with the bad
/// field named.
DensityModel parse_density(const std::string& spec);

}  // namespace qumond::density
