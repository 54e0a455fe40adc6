#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qumond {

// Thrown when a numerical self-check fails (non-convergent extrapolation,
// incompatible residuals). Distinct from invalid_argument so the CLI can
// map it to its own exit code.
class DiagnosticError : public std::runtime_error {
public:
  explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

/// Uniform cell-centered scalar field on [-L,L]^3, x-index fastest.
/// n must be even and >= 4 (conjugate-symmetric spectral layout).
class ScalarGrid {
public:
  ScalarGrid(int n, double half_width);
  ScalarGrid(int n, double half_width, std::vector<double> data);

  static ScalarGrid from_function(int n, double half_width,
                                  const std::function<double(double, double, double)>& f);

  int n() const { return n_; }
  double half_width() const { return half_width_; }
  double spacing() const { return 2.0 * half_width_ / n_; }
  std::size_t size() const { return data_.size(); }

  double coord(int i) const { return -half_width_ + (i + 0.5) * spacing(); }

  double& at(int ix, int iy, int iz) { return data_[index(ix, iy, iz)]; }
  double at(int ix, int iy, int iz) const { return data_[index(ix, iy, iz)]; }
  std::size_t index(int ix, int iy, int iz) const {
    return static_cast<std::size_t>(ix) +
           static_cast<std::size_t>(n_) * (static_cast<std::size_t>(iy) +
                                           static_cast<std::size_t>(n_) * iz);
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool compatible(const ScalarGrid& other) const {
    return n_ == other.n_ && half_width_ == other.half_width_;
  }

  // Throws DiagnosticError if any sample is NaN/Inf.
  void check_finite(const std::string& label) const;

  ScalarGrid& operator+=(const ScalarGrid& other);
  ScalarGrid& operator-=(const ScalarGrid& other);
  ScalarGrid& operator*=(double s);

private:
  int n_;
  double half_width_;
  std::vector<double> data_;
};

ScalarGrid operator+(ScalarGrid a, const ScalarGrid& b);
ScalarGrid operator-(ScalarGrid a, const ScalarGrid& b);
ScalarGrid operator*(double s, ScalarGrid a);

/// Three ScalarGrid components sharing n and half_width.
class VectorGrid {
public:
  VectorGrid(int n, double half_width)
      : comps_{ScalarGrid(n, half_width), ScalarGrid(n, half_width), ScalarGrid(n, half_width)} {}
  VectorGrid(ScalarGrid x, ScalarGrid y, ScalarGrid z);

  int n() const { return comps_[0].n(); }
  double half_width() const { return comps_[0].half_width(); }
  double spacing() const { return comps_[0].spacing(); }

  ScalarGrid& comp(int k) { return comps_[k]; }
  const ScalarGrid& comp(int k) const { return comps_[k]; }

  bool compatible(const VectorGrid& other) const { return comps_[0].compatible(other.comps_[0]); }

  VectorGrid& operator+=(const VectorGrid& other);
  VectorGrid& operator-=(const VectorGrid& other);
  VectorGrid& operator*=(double s);

private:
  ScalarGrid comps_[3];
};

VectorGrid operator+(VectorGrid a, const VectorGrid& b);
VectorGrid operator-(VectorGrid a, const VectorGrid& b);

// Deterministic parallel sum: fixed-size blocks reduced in index order,
// independent of thread count.
double block_sum(const std::vector<double>& v);

/// Midpoint-rule integral sum(g_i) h^3.
double integrate(const ScalarGrid& g);

/// (sum_{|x_i|<radius} |g_i|^q h^3)^{1/q}; radius < 0 means unrestricted.
double lq_norm(const ScalarGrid& g, double q, double radius = -1.0);

double l2_norm(const ScalarGrid& g);
double l2_norm(const VectorGrid& v);

/// Pointwise dot product integrated over the box.
double inner_product(const VectorGrid& a, const VectorGrid& b);

/// Second-order central differences, one-sided (second-order) at the faces.
VectorGrid gradient_fd(const ScalarGrid& u);
ScalarGrid divergence_fd(const VectorGrid& v);
VectorGrid curl_fd(const VectorGrid& v);

/// Pointwise magnitude |v|.
ScalarGrid magnitude(const VectorGrid& v);

/// Trilinear interpolation at a physical point (clamped to the cell-center hull).
double sample_trilinear(const ScalarGrid& g, double x, double y, double z);

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

Vec3 sample_trilinear(const VectorGrid& v, double x, double y, double z);

}  // namespace qumond
