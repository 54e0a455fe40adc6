#include "qumond/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qumond {

namespace {
void validate_shape(int n, double half_width) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("grid: n must be even and >= 4");
  if (!(half_width > 0.0)) throw std::invalid_argument("grid: half_width must be positive");
}
}  // namespace

ScalarGrid::ScalarGrid(int n, double half_width)
    : n_(n), half_width_(half_width), data_(static_cast<std::size_t>(n) * n * n, 0.0) {
  validate_shape(n, half_width);
}

ScalarGrid::ScalarGrid(int n, double half_width, std::vector<double> data)
    : n_(n), half_width_(half_width), data_(std::move(data)) {
  validate_shape(n, half_width);
  if (data_.size() != static_cast<std::size_t>(n) * n * n)
    throw std::invalid_argument("grid: data size does not match n^3");
}

ScalarGrid ScalarGrid::from_function(int n, double half_width,
                                     const std::function<double(double, double, double)>& f) {
  ScalarGrid g(n, half_width);
#pragma omp parallel for schedule(static)
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix)
        g.at(ix, iy, iz) = f(g.coord(ix), g.coord(iy), g.coord(iz));
  return g;
}

void ScalarGrid::check_finite(const std::string& label) const {
  for (double v : data_)
    if (!std::isfinite(v)) throw DiagnosticError(label + ": non-finite sample");
}

ScalarGrid& ScalarGrid::operator+=(const ScalarGrid& other) {
  if (!compatible(other)) throw std::invalid_argument("grid: incompatible grids");
  const std::size_t m = data_.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) data_[i] += other.data_[i];
  return *this;
}

ScalarGrid& ScalarGrid::operator-=(const ScalarGrid& other) {
  if (!compatible(other)) throw std::invalid_argument("grid: incompatible grids");
  const std::size_t m = data_.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) data_[i] -= other.data_[i];
  return *this;
}

ScalarGrid& ScalarGrid::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

ScalarGrid operator+(ScalarGrid a, const ScalarGrid& b) { return a += b; }
ScalarGrid operator-(ScalarGrid a, const ScalarGrid& b) { return a -= b; }
ScalarGrid operator*(double s, ScalarGrid a) { return a *= s; }

VectorGrid::VectorGrid(ScalarGrid x, ScalarGrid y, ScalarGrid z)
    : comps_{std::move(x), std::move(y), std::move(z)} {
  if (!comps_[0].compatible(comps_[1]) || !comps_[0].compatible(comps_[2]))
    throw std::invalid_argument("grid: vector components incompatible");
}

VectorGrid& VectorGrid::operator+=(const VectorGrid& other) {
  for (int k = 0; k < 3; ++k) comps_[k] += other.comps_[k];
  return *this;
}

VectorGrid& VectorGrid::operator-=(const VectorGrid& other) {
  for (int k = 0; k < 3; ++k) comps_[k] -= other.comps_[k];
  return *this;
}

VectorGrid& VectorGrid::operator*=(double s) {
  for (int k = 0; k < 3; ++k) comps_[k] *= s;
  return *this;
}

VectorGrid operator+(VectorGrid a, const VectorGrid& b) { return a += b; }
VectorGrid operator-(VectorGrid a, const VectorGrid& b) { return a -= b; }

double block_sum(const std::vector<double>& v) {
  constexpr std::size_t kBlock = 4096;
  const std::size_t nblocks = (v.size() + kBlock - 1) / kBlock;
  std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
    const std::size_t lo = b * kBlock;
    const std::size_t hi = std::min(v.size(), lo + kBlock);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    partial[b] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

double integrate(const ScalarGrid& g) {
  const double h = g.spacing();
  return block_sum(g.data()) * h * h * h;
}

double lq_norm(const ScalarGrid& g, double q, double radius) {
  if (q < 1.0) throw std::invalid_argument("lq_norm: q must be >= 1");
  if (radius >= 0.0 && radius > g.half_width() * std::sqrt(3.0) + 1e-12)
    throw std::invalid_argument("lq_norm: radius exceeds grid diagonal");
  const int n = g.n();
  const double h = g.spacing();
  const double r2 = radius * radius;
  std::vector<double> rows(static_cast<std::size_t>(n) * n, 0.0);
#pragma omp parallel for schedule(static)
  for (int iz = 0; iz < n; ++iz) {
    for (int iy = 0; iy < n; ++iy) {
      double s = 0.0;
      const double y = g.coord(iy), z = g.coord(iz);
      for (int ix = 0; ix < n; ++ix) {
        if (radius >= 0.0) {
          const double x = g.coord(ix);
          if (x * x + y * y + z * z >= r2) continue;
        }
        s += std::pow(std::abs(g.at(ix, iy, iz)), q);
      }
      rows[static_cast<std::size_t>(iz) * n + iy] = s;
    }
  }
  double total = 0.0;
  for (double s : rows) total += s;
  return std::pow(total * h * h * h, 1.0 / q);
}

double l2_norm(const ScalarGrid& g) { return lq_norm(g, 2.0); }

double l2_norm(const VectorGrid& v) {
  double s = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double c = l2_norm(v.comp(k));
    s += c * c;
  }
  return std::sqrt(s);
}

double inner_product(const VectorGrid& a, const VectorGrid& b) {
  if (!a.compatible(b)) throw std::invalid_argument("inner_product: incompatible grids");
  const std::size_t m = a.comp(0).size();
  std::vector<double> prod(m, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i)
    prod[i] = a.comp(0).data()[i] * b.comp(0).data()[i] +
              a.comp(1).data()[i] * b.comp(1).data()[i] +
              a.comp(2).data()[i] * b.comp(2).data()[i];
  const double h = a.spacing();
  return block_sum(prod) * h * h * h;
}

namespace {
// Second-order one-sided / central difference along one axis.
inline double diff1d(const ScalarGrid& u, int ix, int iy, int iz, int axis) {
  const int n = u.n();
  const double inv2h = 1.0 / (2.0 * u.spacing());
  int idx[3] = {ix, iy, iz};
  auto val = [&](int off) {
    int c[3] = {idx[0], idx[1], idx[2]};
    c[axis] += off;
    return u.at(c[0], c[1], c[2]);
  };
  const int i = idx[axis];
  if (i == 0) return (-3.0 * val(0) + 4.0 * val(1) - val(2)) * inv2h;
  if (i == n - 1) return (3.0 * val(0) - 4.0 * val(-1) + val(-2)) * inv2h;
  return (val(1) - val(-1)) * inv2h;
}
}  // namespace

VectorGrid gradient_fd(const ScalarGrid& u) {
  const int n = u.n();
  VectorGrid g(n, u.half_width());
#pragma omp parallel for schedule(static)
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix)
        for (int k = 0; k < 3; ++k)
          g.comp(k).at(ix, iy, iz) = diff1d(u, ix, iy, iz, k);
  return g;
}

ScalarGrid divergence_fd(const VectorGrid& v) {
  const int n = v.n();
  ScalarGrid d(n, v.half_width());
#pragma omp parallel for schedule(static)
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix)
        d.at(ix, iy, iz) = diff1d(v.comp(0), ix, iy, iz, 0) +
                           diff1d(v.comp(1), ix, iy, iz, 1) +
                           diff1d(v.comp(2), ix, iy, iz, 2);
  return d;
}

VectorGrid curl_fd(const VectorGrid& v) {
  const int n = v.n();
  VectorGrid c(n, v.half_width());
#pragma omp parallel for schedule(static)
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        c.comp(0).at(ix, iy, iz) =
            diff1d(v.comp(2), ix, iy, iz, 1) - diff1d(v.comp(1), ix, iy, iz, 2);
        c.comp(1).at(ix, iy, iz) =
            diff1d(v.comp(0), ix, iy, iz, 2) - diff1d(v.comp(2), ix, iy, iz, 0);
        c.comp(2).at(ix, iy, iz) =
            diff1d(v.comp(1), ix, iy, iz, 0) - diff1d(v.comp(0), ix, iy, iz, 1);
      }
  return c;
}

ScalarGrid magnitude(const VectorGrid& v) {
  const int n = v.n();
  ScalarGrid m(n, v.half_width());
  const std::size_t sz = m.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sz); ++i) {
    const double a = v.comp(0).data()[i];
    const double b = v.comp(1).data()[i];
    const double c = v.comp(2).data()[i];
    m.data()[i] = std::sqrt(a * a + b * b + c * c);
  }
  return m;
}

double sample_trilinear(const ScalarGrid& g, double x, double y, double z) {
  const int n = g.n();
  const double h = g.spacing();
  auto locate = [&](double c, int& i0, double& t) {
    double u = (c + g.half_width()) / h - 0.5;
    u = std::clamp(u, 0.0, static_cast<double>(n - 1));
    i0 = std::min(static_cast<int>(u), n - 2);
    t = u - i0;
  };
  int ix, iy, iz;
  double tx, ty, tz;
  locate(x, ix, tx);
  locate(y, iy, ty);
  locate(z, iz, tz);
  double acc = 0.0;
  for (int dz = 0; dz < 2; ++dz)
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) {
        const double w = (dx ? tx : 1 - tx) * (dy ? ty : 1 - ty) * (dz ? tz : 1 - tz);
        acc += w * g.at(ix + dx, iy + dy, iz + dz);
      }
  return acc;
}

Vec3 sample_trilinear(const VectorGrid& v, double x, double y, double z) {
  return {sample_trilinear(v.comp(0), x, y, z), sample_trilinear(v.comp(1), x, y, z),
          sample_trilinear(v.comp(2), x, y, z)};
}

}  // namespace qumond
