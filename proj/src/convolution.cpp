#include "qumond/convolution.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>

namespace qumond {

double inverse_radius_cell_mean(double h) {
  // Spherical-coordinate form: mean = (3/h^3) * a * J with a = h/2 and
  // J = int_{[-a,a]^2} du dv / sqrt(u^2 + v^2 + a^2), the six cube faces
  // contributing equally. J is smooth, Gauss-Legendre converges fast.
  static const double unit = [] {
    constexpr int m = 48;
    // Gauss-Legendre nodes/weights on [-1,1] via Newton iteration.
    std::vector<double> x(m), w(m);
    for (int i = 0; i < m; ++i) {
      double t = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= m; ++k) {
          double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = m * (t * p1 - p0) / (t * t - 1.0);
        double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-15) break;
      }
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = m * (t * p1 - p0) / (t * t - 1.0);
      x[i] = t;
      w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    const double a = 0.5;  // h = 1
    double J = 0.0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const double u = a * x[i], v = a * x[j];
        J += a * a * w[i] * w[j] / std::sqrt(u * u + v * v + a * a);
      }
    return 3.0 * a * J;  // h = 1 cube
  }();
  return unit / h;
}

struct FreeSpaceConvolver::Impl {
  int m = 0;                 // padded size per axis
  std::size_t real_size = 0;
  std::size_t spec_size = 0;
  double* real_buf = nullptr;
  fftw_complex* spec_buf = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  std::unordered_map<std::string, std::vector<std::complex<double>>> kernels;

  ~Impl() {
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
    if (real_buf) fftw_free(real_buf);
    if (spec_buf) fftw_free(spec_buf);
  }
};

FreeSpaceConvolver::FreeSpaceConvolver(int n, double half_width)
    : n_(n), half_width_(half_width), h_(2.0 * half_width / n), impl_(std::make_unique<Impl>()) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("convolver: n must be even and >= 4");
  impl_->m = 2 * n;
  const int m = impl_->m;
  impl_->real_size = static_cast<std::size_t>(m) * m * m;
  impl_->spec_size = static_cast<std::size_t>(m) * m * (m / 2 + 1);
  impl_->real_buf = fftw_alloc_real(impl_->real_size);
  impl_->spec_buf = fftw_alloc_complex(impl_->spec_size);
  impl_->fwd = fftw_plan_dft_r2c_3d(m, m, m, impl_->real_buf, impl_->spec_buf, FFTW_ESTIMATE);
  impl_->bwd = fftw_plan_dft_c2r_3d(m, m, m, impl_->spec_buf, impl_->real_buf, FFTW_ESTIMATE);
}

FreeSpaceConvolver::~FreeSpaceConvolver() = default;

void FreeSpaceConvolver::clear_kernel_cache() { impl_->kernels.clear(); }

const std::vector<std::complex<double>>& FreeSpaceConvolver::kernel_spectrum(
    const std::string& key, const KernelFn& fn) {
  auto it = impl_->kernels.find(key);
  if (it != impl_->kernels.end()) return it->second;

  const int m = impl_->m;
  double* buf = impl_->real_buf;
#pragma omp parallel for schedule(static)
  for (int iz = 0; iz < m; ++iz) {
    const double wz = (iz <= m / 2 ? iz : iz - m) * h_;
    for (int iy = 0; iy < m; ++iy) {
      const double wy = (iy <= m / 2 ? iy : iy - m) * h_;
      for (int ix = 0; ix < m; ++ix) {
        const double wx = (ix <= m / 2 ? ix : ix - m) * h_;
        buf[static_cast<std::size_t>(ix) + static_cast<std::size_t>(m) * (iy + static_cast<std::size_t>(m) * iz)] =
            (ix == m / 2 || iy == m / 2 || iz == m / 2) ? 0.0 : fn(wx, wy, wz);
      }
    }
  }
  fftw_execute(impl_->fwd);
  std::vector<std::complex<double>> spec(impl_->spec_size);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(impl_->spec_size); ++i)
    spec[i] = {impl_->spec_buf[i][0], impl_->spec_buf[i][1]};
  auto [ins, ok] = impl_->kernels.emplace(key, std::move(spec));
  (void)ok;
  return ins->second;
}

ScalarGrid FreeSpaceConvolver::convolve(const ScalarGrid& g,
                                        const std::vector<std::complex<double>>& spec) {
  if (g.n() != n_ || g.half_width() != half_width_)
    throw std::invalid_argument("convolver: grid does not match convolver shape");
  const int m = impl_->m;
  double* buf = impl_->real_buf;
  std::fill(buf, buf + impl_->real_size, 0.0);
#pragma omp parallel for schedule(static)
  for (int iz = 0; iz < n_; ++iz)
    for (int iy = 0; iy < n_; ++iy)
      for (int ix = 0; ix < n_; ++ix)
        buf[static_cast<std::size_t>(ix) + static_cast<std::size_t>(m) * (iy + static_cast<std::size_t>(m) * iz)] =
            g.at(ix, iy, iz);
  fftw_execute(impl_->fwd);
  const double scale = h_ * h_ * h_ / static_cast<double>(impl_->real_size);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(impl_->spec_size); ++i) {
    const std::complex<double> a{impl_->spec_buf[i][0], impl_->spec_buf[i][1]};
    const std::complex<double> r = a * spec[i] * scale;
    impl_->spec_buf[i][0] = r.real();
    impl_->spec_buf[i][1] = r.imag();
  }
  fftw_execute(impl_->bwd);
  ScalarGrid out(n_, half_width_);
#pragma omp parallel for schedule(static)
  for (int iz = 0; iz < n_; ++iz)
    for (int iy = 0; iy < n_; ++iy)
      for (int ix = 0; ix < n_; ++ix)
        out.at(ix, iy, iz) =
            buf[static_cast<std::size_t>(ix) + static_cast<std::size_t>(m) * (iy + static_cast<std::size_t>(m) * iz)];
  return out;
}

ScalarGrid FreeSpaceConvolver::potential(const ScalarGrid& g) {
  const double self = -inverse_radius_cell_mean(h_);
  const auto& spec = kernel_spectrum("potential", [self](double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    return r > 0.0 ? -1.0 / r : self;
  });
  return convolve(g, spec);
}

ScalarGrid FreeSpaceConvolver::field_component(const ScalarGrid& g, int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("field_component: axis in 0..2");
  const auto& spec =
      kernel_spectrum("field" + std::to_string(axis), [axis](double x, double y, double z) {
        const double r = std::sqrt(x * x + y * y + z * z);
        if (r == 0.0) return 0.0;  // odd kernel averages to zero over the cell
        const double c[3] = {x, y, z};
        return c[axis] / (r * r * r);
      });
  return convolve(g, spec);
}

VectorGrid FreeSpaceConvolver::field(const ScalarGrid& g) {
  return VectorGrid(field_component(g, 0), field_component(g, 1), field_component(g, 2));
}

namespace {
inline double tij_point(int i, int j, double x, double y, double z) {
  const double r2 = x * x + y * y + z * z;
  const double r = std::sqrt(r2);
  const double c[3] = {x, y, z};
  const double d = (i == j) ? 1.0 : 0.0;
  return -(3.0 * c[i] * c[j] / (r2 * r2 * r) - d / (r2 * r));
}
}  // namespace

ScalarGrid FreeSpaceConvolver::tij_eps(const ScalarGrid& g, int i, int j, double eps) {
  if (i < 0 || i > 2 || j < 0 || j > 2) throw std::invalid_argument("tij_eps: indices in 0..2");
  if (eps < h_) throw std::invalid_argument("tij_eps: eps must be >= grid spacing");
  const double h = h_;
  const double avg_radius = eps + 3.0 * h;  // cell-average the kernel this close to the ball
  constexpr int kSub = 7;
  const std::string key = "tij" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(eps);
  const auto& spec = kernel_spectrum(key, [=](double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r <= eps) return 0.0;  // truncation at cell-center granularity
    if (r > avg_radius) return tij_point(i, j, x, y, z);
    double acc = 0.0;
    for (int a = 0; a < kSub; ++a)
      for (int b = 0; b < kSub; ++b)
        for (int c = 0; c < kSub; ++c) {
          const double px = x + ((a + 0.5) / kSub - 0.5) * h;
          const double py = y + ((b + 0.5) / kSub - 0.5) * h;
          const double pz = z + ((c + 0.5) / kSub - 0.5) * h;
          acc += tij_point(i, j, px, py, pz);
        }
    return acc / (kSub * kSub * kSub);
  });
  return convolve(g, spec);
}

ScalarGrid apply_periodic_multiplier(const ScalarGrid& g,
                                     const std::function<double(double, double, double)>& mult) {
  const int n = g.n();
  const std::size_t real_size = static_cast<std::size_t>(n) * n * n;
  const std::size_t spec_size = static_cast<std::size_t>(n) * n * (n / 2 + 1);
  double* buf = fftw_alloc_real(real_size);
  fftw_complex* spec = fftw_alloc_complex(spec_size);
  fftw_plan fwd = fftw_plan_dft_r2c_3d(n, n, n, buf, spec, FFTW_ESTIMATE);
  fftw_plan bwd = fftw_plan_dft_c2r_3d(n, n, n, spec, buf, FFTW_ESTIMATE);
  std::copy(g.data().begin(), g.data().end(), buf);
  fftw_execute(fwd);
  const double dk = std::numbers::pi / g.half_width();  // 2*pi / (2L)
#pragma omp parallel for schedule(static)
  for (int iz = 0; iz < n; ++iz) {
    const double kz = dk * (iz <= n / 2 ? iz : iz - n);
    for (int iy = 0; iy < n; ++iy) {
      const double ky = dk * (iy <= n / 2 ? iy : iy - n);
      for (int ix = 0; ix <= n / 2; ++ix) {
        const double kx = dk * ix;
        const double f = mult(kx, ky, kz) / real_size;
        const std::size_t idx =
            static_cast<std::size_t>(ix) + (static_cast<std::size_t>(n / 2) + 1) * (iy + static_cast<std::size_t>(n) * iz);
        spec[idx][0] *= f;
        spec[idx][1] *= f;
      }
    }
  }
  fftw_execute(bwd);
  ScalarGrid out(n, g.half_width(), std::vector<double>(buf, buf + real_size));
  fftw_destroy_plan(fwd);
  fftw_destroy_plan(bwd);
  fftw_free(buf);
  fftw_free(spec);
  return out;
}

}  // namespace qumond
