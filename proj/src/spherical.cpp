#include "qumond/spherical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qumond::spherical {

RadialProfile cumulative_mass(const RadialProfile& rho) {
  const auto& r = rho.radii();
  const auto& v = rho.values();
  std::vector<double> mass(r.size(), 0.0);
  // [0, r_0] contributes with rho held at its innermost sample
  mass[0] = 4.0 * std::numbers::pi * v[0] * r[0] * r[0] * r[0] / 3.0;
  for (std::size_t i = 1; i < r.size(); ++i) {
    const double fa = r[i - 1] * r[i - 1] * v[i - 1];
    const double fb = r[i] * r[i] * v[i];
    mass[i] = mass[i - 1] + 4.0 * std::numbers::pi * 0.5 * (fa + fb) * (r[i] - r[i - 1]);
  }
  return RadialProfile(r, std::move(mass));
}

SphericalModel SphericalModel::from_profile(const RadialProfile& rho_profile) {
  RadialProfile mass_profile = cumulative_mass(rho_profile);
  SphericalModel m;
  const double r_last = rho_profile.radii().back();
  const double m_last = mass_profile.values().back();
  m.rho = [rho_profile, r_last](double r) {
    return r > r_last ? 0.0 : rho_profile.interpolate(r);
  };
  const double r_first = mass_profile.radii().front();
  const double m_first = mass_profile.values().front();
  m.mass = [mass_profile, r_first, m_first](double r) {
    if (r <= 0.0) return 0.0;
    if (r < r_first) return m_first * (r / r_first) * (r / r_first) * (r / r_first);
    return mass_profile.interpolate(r);
  };
  m.total_mass = m_last;
  m.support_radius = 0.0;
  for (std::size_t i = rho_profile.size(); i-- > 0;) {
    if (rho_profile.value(i) != 0.0) {
      m.support_radius = rho_profile.radius(i);
      break;
    }
  }
  return m;
}

double newtonian_field_spherical(const SphericalModel& model, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("newtonian_field_spherical: r must be positive");
  return model.mass(r) / (r * r);
}

double sqrt_mass_derivative(const SphericalModel& model, double r) {
  if (r < 0.0) throw std::invalid_argument("sqrt_mass_derivative: r must be nonnegative");
  const double m = model.mass(r);
  if (!(m > 0.0)) return 0.0;
  return 2.0 * std::numbers::pi * r * r * model.rho(r) / std::sqrt(m);
}

double mond_laplacian(const SphericalModel& model, const mond::InterpolationFunction& lam,
                      double r) {
  if (!(r > 0.0)) throw std::invalid_argument("mond_laplacian: r must be positive");
  const double rho = model.rho(r);
  const double m = model.mass(r);
  const double newtonian = 4.0 * std::numbers::pi * rho;
  if (!(m > 0.0)) return newtonian;  // hollow: tilde_lambda(0) = 0, sqrt(M)' = 0
  if (lam.deep_mond) {
    const double root_a0 = std::sqrt(lam.a0);
    return newtonian +
           root_a0 * (std::sqrt(m) / (r * r) + sqrt_mass_derivative(model, r) / r);
  }
  const double sigma = m / (r * r);
  const double m_prime = 4.0 * std::numbers::pi * r * r * rho;
  return newtonian + lam.tilde_prime(sigma) * (m_prime / (r * r) - 2.0 * m / (r * r * r)) +
         2.0 * lam.tilde(sigma) / r;
}

double circular_velocity(const SphericalModel& model, const mond::InterpolationFunction& lam,
                         double r, bool newton_only) {
  if (!(r > 0.0)) throw std::invalid_argument("circular_velocity: r must be positive");
  const double g_newton = model.mass(r) / (r * r);
  const double g = newton_only ? g_newton : g_newton + lam.tilde(g_newton);
  return std::sqrt(std::max(0.0, r * g));
}

double lq_norm_radial(const RadialProfile& f, double q, double R) {
  if (q < 1.0) throw std::invalid_argument("lq_norm_radial: q must be >= 1");
  if (!(R > 0.0)) throw std::invalid_argument("lq_norm_radial: R must be positive");
  const auto& r = f.radii();
  const auto& v = f.values();
  auto integrand = [q](double radius, double value) {
    return radius * radius * std::pow(std::abs(value), q);
  };
  // [0, r_0]: value held constant at the innermost sample
  const double r0 = std::min(R, r.front());
  double acc = std::pow(std::abs(v.front()), q) * r0 * r0 * r0 / 3.0;
  for (std::size_t i = 1; i < r.size() && r[i - 1] < R; ++i) {
    const double b = std::min(R, r[i]);
    const double vb = b < r[i] ? f.interpolate(b) : v[i];
    acc += 0.5 * (integrand(r[i - 1], v[i - 1]) + integrand(b, vb)) * (b - r[i - 1]);
  }
  if (R > r.back()) {
    // constant extrapolation beyond the mesh
    const double a = r.back();
    acc += std::pow(std::abs(v.back()), q) * (R * R * R - a * a * a) / 3.0;
  }
  return std::pow(4.0 * std::numbers::pi * acc, 1.0 / q);
}

}  // namespace qumond::spherical
