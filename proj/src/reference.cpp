#include "qumond/reference.hpp"

#include <cmath>

#include "qumond/convolution.hpp"

namespace qumond::reference {

namespace {

// Same kernel formulas as the spectral path in convolution.cpp, summed
// directly over cell pairs.
template <typename Kernel>
ScalarGrid direct_convolve(const ScalarGrid& g, Kernel kernel) {
  const int n = g.n();
  const double h = g.spacing();
  ScalarGrid out(n, g.half_width());
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        double acc = 0.0;
        for (int jz = 0; jz < n; ++jz)
          for (int jy = 0; jy < n; ++jy)
            for (int jx = 0; jx < n; ++jx) {
              const double gv = g.at(jx, jy, jz);
              if (gv == 0.0) continue;
              acc += gv * kernel((ix - jx) * h, (iy - jy) * h, (iz - jz) * h);
            }
        out.at(ix, iy, iz) = acc * h * h * h;
      }
  return out;
}

double tij_point(int i, int j, double x, double y, double z) {
  const double r2 = x * x + y * y + z * z;
  const double r = std::sqrt(r2);
  const double c[3] = {x, y, z};
  const double d = (i == j) ? 1.0 : 0.0;
  return -(3.0 * c[i] * c[j] / (r2 * r2 * r) - d / (r2 * r));
}

}  // namespace

ScalarGrid potential_direct(const ScalarGrid& g) {
  const double self = -inverse_radius_cell_mean(g.spacing());
  return direct_convolve(g, [self](double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    return r > 0.0 ? -1.0 / r : self;
  });
}

VectorGrid field_direct(const ScalarGrid& g) {
  VectorGrid out(g.n(), g.half_width());
  for (int axis = 0; axis < 3; ++axis)
    out.comp(axis) = direct_convolve(g, [axis](double x, double y, double z) {
      const double r = std::sqrt(x * x + y * y + z * z);
      if (r == 0.0) return 0.0;
      const double c[3] = {x, y, z};
      return c[axis] / (r * r * r);
    });
  return out;
}

ScalarGrid tij_eps_direct(const ScalarGrid& g, int i, int j, double eps) {
  const double h = g.spacing();
  const double avg_radius = eps + 3.0 * h;
  constexpr int kSub = 7;
  return direct_convolve(g, [=](double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r <= eps) return 0.0;
    if (r > avg_radius) return tij_point(i, j, x, y, z);
    double acc = 0.0;
    for (int a = 0; a < kSub; ++a)
      for (int b = 0; b < kSub; ++b)
        for (int c = 0; c < kSub; ++c)
          acc += tij_point(i, j, x + ((a + 0.5) / kSub - 0.5) * h,
                           y + ((b + 0.5) / kSub - 0.5) * h,
                           z + ((c + 0.5) / kSub - 0.5) * h);
    return acc / (kSub * kSub * kSub);
  });
}

double integrate_serial(const ScalarGrid& g) {
  double acc = 0.0;
  for (double v : g.data()) acc += v;
  const double h = g.spacing();
  return acc * h * h * h;
}

VectorGrid gradient_fd_serial(const ScalarGrid& u) {
  const int n = u.n();
  const double h = u.spacing();
  VectorGrid out(n, u.half_width());
  auto diff = [h](double m1, double p1) { return (p1 - m1) / (2.0 * h); };
  auto one_sided = [h](double f0, double f1, double f2, double sign) {
    return sign * (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
  };
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        out.comp(0).at(ix, iy, iz) =
            ix == 0 ? one_sided(u.at(0, iy, iz), u.at(1, iy, iz), u.at(2, iy, iz), 1.0)
            : ix == n - 1
                ? one_sided(u.at(n - 1, iy, iz), u.at(n - 2, iy, iz), u.at(n - 3, iy, iz), -1.0)
                : diff(u.at(ix - 1, iy, iz), u.at(ix + 1, iy, iz));
        out.comp(1).at(ix, iy, iz) =
            iy == 0 ? one_sided(u.at(ix, 0, iz), u.at(ix, 1, iz), u.at(ix, 2, iz), 1.0)
            : iy == n - 1
                ? one_sided(u.at(ix, n - 1, iz), u.at(ix, n - 2, iz), u.at(ix, n - 3, iz), -1.0)
                : diff(u.at(ix, iy - 1, iz), u.at(ix, iy + 1, iz));
        out.comp(2).at(ix, iy, iz) =
            iz == 0 ? one_sided(u.at(ix, iy, 0), u.at(ix, iy, 1), u.at(ix, iy, 2), 1.0)
            : iz == n - 1
                ? one_sided(u.at(ix, iy, n - 1), u.at(ix, iy, n - 2), u.at(ix, iy, n - 3), -1.0)
                : diff(u.at(ix, iy, iz - 1), u.at(ix, iy, iz + 1));
      }
  return out;
}

}  // namespace qumond::reference
