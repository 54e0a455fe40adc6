#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qumond/grid.hpp"

namespace qumond {

/// Mean of 1/|x| over a cube of side h centered at the origin (= c/h with
/// c ~ 2.38). Used as the self-cell value of the potential kernel.
double inverse_radius_cell_mean(double h);

/// Free-space (zero-padded, domain doubled per axis) convolution of grid
/// fields with radial kernels sampled at cell displacements. Kernel spectra
/// are cached per (name, eps).
class FreeSpaceConvolver {
public:
  FreeSpaceConvolver(int n, double half_width);
  ~FreeSpaceConvolver();

  FreeSpaceConvolver(const FreeSpaceConvolver&) = delete;
  FreeSpaceConvolver& operator=(const FreeSpaceConvolver&) = delete;

  int n() const { return n_; }
  double half_width() const { return half_width_; }
  double spacing() const { return h_; }

  /// Convolution with -1/|x|; self cell uses the analytic cell mean.
  ScalarGrid potential(const ScalarGrid& g);

  /// Convolution with x_axis/|x|^3; self cell is zero (odd kernel).
  ScalarGrid field_component(const ScalarGrid& g, int axis);
  VectorGrid field(const ScalarGrid& g);

  /// Truncated second-derivative kernel
  ///   -(3 d_i d_j / |d|^5 - delta_ij / |d|^3) for |d| > eps, 0 otherwise.
  /// Truncation is decided by cell-center distance; included cells within
  /// near_field_radius() of the ball are cell-averaged by subsampling.
  ScalarGrid tij_eps(const ScalarGrid& g, int i, int j, double eps);

  void clear_kernel_cache();

private:
  struct Impl;

  using KernelFn = std::function<double(double, double, double)>;

  const std::vector<std::complex<double>>& kernel_spectrum(const std::string& key,
                                                           const KernelFn& fn);
  ScalarGrid convolve(const ScalarGrid& g, const std::vector<std::complex<double>>& spec);

  int n_;
  double half_width_;
  double h_;
  std::unique_ptr<Impl> impl_;
};

/// Periodic spectral multiplier on the grid's own box (period 2L); used for
/// band-limited field synthesis and filtering. k components are 2*pi*j/(2L).
ScalarGrid apply_periodic_multiplier(
    const ScalarGrid& g, const std::function<double(double, double, double)>& mult);

}  // namespace qumond
