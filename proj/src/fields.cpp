#include "qumond/fields.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "qumond/convolution.hpp"

namespace qumond::fields {

namespace {

// C^inf step: 0 at t<=0, 1 at t>=1
double smoothstep_inf(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

}  // namespace

ScalarGrid bump_window(int n, double half_width, double r0, double r1) {
  return ScalarGrid::from_function(n, half_width, [r0, r1](double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    return 1.0 - smoothstep_inf((r - r0) / (r1 - r0));
  });
}

ScalarGrid band_limited_scalar(int n, double half_width, std::uint64_t seed,
                               double band_fraction) {
  ScalarGrid g(n, half_width);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double& v : g.data()) v = gauss(rng);

  const double k_nyq = std::numbers::pi / g.spacing();
  const double k_cut = band_fraction * k_nyq;
  g = apply_periodic_multiplier(g, [k_cut](double kx, double ky, double kz) {
    const double k = std::sqrt(kx * kx + ky * ky + kz * kz);
    if (k > k_cut) return 0.0;
    return std::exp(-0.5 * (k / (0.30 * k_cut)) * (k / (0.30 * k_cut)));
  });

  const ScalarGrid window = bump_window(n, half_width, 0.35 * half_width, 0.65 * half_width);
  for (std::size_t i = 0; i < g.size(); ++i) g.data()[i] *= window.data()[i];

  const double norm = l2_norm(g);
  if (norm > 0.0) g *= 1.0 / norm;
  return g;
}

VectorGrid band_limited_vector(int n, double half_width, std::uint64_t seed,
                               double band_fraction) {
  return VectorGrid(band_limited_scalar(n, half_width, seed * 3 + 0, band_fraction),
                    band_limited_scalar(n, half_width, seed * 3 + 1, band_fraction),
                    band_limited_scalar(n, half_width, seed * 3 + 2, band_fraction));
}

VectorGrid band_limited_solenoidal(int n, double half_width, std::uint64_t seed,
                                   double band_fraction) {
  VectorGrid a = band_limited_vector(n, half_width, seed ^ 0x5f5f5f5f, band_fraction);
  VectorGrid w = curl_fd(a);
  // the curl keeps the vector potential's compact support, so re-windowing
  // is unnecessary; normalize for comparability
  const double norm = l2_norm(w);
  if (norm > 0.0) w *= 1.0 / norm;
  return w;
}

ScalarGrid bump_test_function(int n, double half_width, const Vec3& center, double width) {
  return ScalarGrid::from_function(
      n, half_width, [center, width](double x, double y, double z) {
        const double dx = x - center.x, dy = y - center.y, dz = z - center.z;
        const double t = (dx * dx + dy * dy + dz * dz) / (width * width);
        return t < 1.0 ? std::exp(-1.0 / (1.0 - t)) : 0.0;
      });
}

}  // namespace qumond::fields
