#include "qumond/mond.hpp"

#include <cmath>
#include <numbers>

#include "qumond/newtonian.hpp"

namespace qumond::mond {

void InterpolationFunction::validate() const {
  if (!(a0 > 0.0)) throw DiagnosticError("interpolation function: a0 must be positive");
  if (!(big_lambda > 0.0)) throw DiagnosticError("interpolation function: Lambda must be positive");
  const double slack = 1.0 + 1e-9;
  const int decades = 12, per_decade = 16;
  for (int k = 0; k <= decades * per_decade; ++k) {
    const double sigma = a0 * std::pow(10.0, -6.0 + static_cast<double>(k) / per_decade);
    const double l = lambda(sigma);
    const double lp = lambda_prime(sigma);
    if (!(l >= 0.0) || l > slack * big_lambda / std::sqrt(sigma))
      throw DiagnosticError("interpolation function: lambda bound violated at sigma=" +
                            std::to_string(sigma));
    if (lp > 1e-12 * big_lambda || lp < -slack * big_lambda / (2.0 * std::pow(sigma, 1.5)))
      throw DiagnosticError("interpolation function: lambda' bound violated at sigma=" +
                            std::to_string(sigma));
  }
  if (lambda(1e6 * a0) > 1e-2 * lambda(a0))
    throw DiagnosticError("interpolation function: lambda does not decay at large sigma");
}

InterpolationFunction lambda_deep_mond(double a0) {
  if (!(a0 > 0.0)) throw std::invalid_argument("lambda_deep_mond: a0 must be positive");
  InterpolationFunction f;
  const double root_a0 = std::sqrt(a0);
  f.lambda = [root_a0](double s) { return root_a0 / std::sqrt(s); };
  f.lambda_prime = [root_a0](double s) { return -0.5 * root_a0 / std::pow(s, 1.5); };
  f.big_lambda = root_a0;
  f.a0 = a0;
  f.deep_mond = true;
  return f;
}

namespace {
inline double norm3(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }
}  // namespace

double holder_vector_check(const InterpolationFunction& lam, const Vec3& u, const Vec3& v) {
  const double du = norm3({u.x - v.x, u.y - v.y, u.z - v.z});
  if (du == 0.0) return 0.0;
  const double nu = norm3(u), nv = norm3(v);
  const double lu = nu > 0.0 ? lam.lambda(nu) : 0.0;
  const double lv = nv > 0.0 ? lam.lambda(nv) : 0.0;
  const Vec3 d{lu * u.x - lv * v.x, lu * u.y - lv * v.y, lu * u.z - lv * v.z};
  return norm3(d) / std::sqrt(du);
}

VectorGrid phantom_field(const VectorGrid& grad_un, const InterpolationFunction& lam) {
  const int n = grad_un.n();
  VectorGrid out(n, grad_un.half_width());
  const std::size_t m = grad_un.comp(0).size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    const double gx = grad_un.comp(0).data()[i];
    const double gy = grad_un.comp(1).data()[i];
    const double gz = grad_un.comp(2).data()[i];
    const double mag = std::sqrt(gx * gx + gy * gy + gz * gz);
    const double l = mag > 0.0 ? lam.lambda(mag) : 0.0;
    out.comp(0).data()[i] = l * gx;
    out.comp(1).data()[i] = l * gy;
    out.comp(2).data()[i] = l * gz;
  }
  return out;
}

VectorGrid mond_field(FreeSpaceConvolver& conv, const ScalarGrid& rho,
                      const InterpolationFunction& lam, const singular::EpsilonSchedule& sched) {
  VectorGrid grad_un = newtonian::solve_field(conv, rho);
  VectorGrid phantom = phantom_field(grad_un, lam);
  VectorGrid projected = helmholtz::project_irrotational(conv, phantom, sched);
  projected += grad_un;
  return projected;
}

std::vector<double> milgrom_potential(FreeSpaceConvolver& conv, const ScalarGrid& rho,
                                      const InterpolationFunction& lam,
                                      const std::vector<Vec3>& points) {
  VectorGrid grad_un = newtonian::solve_field(conv, rho);
  VectorGrid w = phantom_field(grad_un, lam);
  const int n = w.n();
  const double h = w.spacing();
  const double cell = h * h * h / (4.0 * std::numbers::pi);
  const double self_cut = 0.5 * h;

  // validate before the parallel loop: exceptions cannot leave an omp region
  for (const Vec3& x : points)
    if (std::abs(x.x) > w.half_width() || std::abs(x.y) > w.half_width() ||
        std::abs(x.z) > w.half_width())
      throw std::invalid_argument("milgrom_potential: evaluation point outside the box");

  std::vector<double> values(points.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(points.size()); ++p) {
    const Vec3 x = points[p];
    double acc = 0.0;
    for (int iz = 0; iz < n; ++iz) {
      const double yz = w.comp(0).coord(iz);
      for (int iy = 0; iy < n; ++iy) {
        const double yy = w.comp(0).coord(iy);
        for (int ix = 0; ix < n; ++ix) {
          const double yx = w.comp(0).coord(ix);
          const std::size_t idx = w.comp(0).index(ix, iy, iz);
          const double wx = w.comp(0).data()[idx];
          const double wy = w.comp(1).data()[idx];
          const double wz = w.comp(2).data()[idx];
          if (wx == 0.0 && wy == 0.0 && wz == 0.0) continue;

          double kx = 0.0, ky = 0.0, kz = 0.0;
          const double dx = x.x - yx, dy = x.y - yy, dz = x.z - yz;
          const double dr = std::sqrt(dx * dx + dy * dy + dz * dz);
          if (dr >= self_cut) {
            const double dr3 = dr * dr * dr;
            kx = dx / dr3;
            ky = dy / dr3;
            kz = dz / dr3;
          }
          const double yr = std::sqrt(yx * yx + yy * yy + yz * yz);
          const double yr3 = yr * yr * yr;  // no cell center sits at the origin (n even)
          kx += yx / yr3;
          ky += yy / yr3;
          kz += yz / yr3;
          acc += wx * kx + wy * ky + wz * kz;
        }
      }
    }
    values[p] = acc * cell;
  }
  return values;
}

std::vector<double> weak_pde_residual(FreeSpaceConvolver& conv, const ScalarGrid& rho,
                                      const InterpolationFunction& lam,
                                      const std::vector<ScalarGrid>& testfns,
                                      const singular::EpsilonSchedule& sched) {
  VectorGrid grad_un = newtonian::solve_field(conv, rho);
  VectorGrid rhs_field = phantom_field(grad_un, lam);
  rhs_field += grad_un;  // grad U^N + lambda(...) grad U^N
  VectorGrid lhs_field = helmholtz::project_irrotational(conv, phantom_field(grad_un, lam), sched);
  lhs_field += grad_un;  // grad U^M

  std::vector<double> gaps;
  gaps.reserve(testfns.size());
  for (const ScalarGrid& phi : testfns) {
    if (!phi.compatible(rho)) throw std::invalid_argument("weak_pde_residual: incompatible grid");
    VectorGrid grad_phi = gradient_fd(phi);
    const double lhs = inner_product(lhs_field, grad_phi);
    const double rhs = inner_product(rhs_field, grad_phi);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    gaps.push_back(scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0);
  }
  return gaps;
}

}  // namespace qumond::mond
