#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qumond {

/// Nonuniform 1-D radial samples (r strictly increasing, positive).
class RadialProfile {
public:
  RadialProfile() = default;
  RadialProfile(std::vector<double> radii, std::vector<double> values);

  std::size_t size() const { return radii_.size(); }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& values() const { return values_; }
  double radius(std::size_t i) const { return radii_[i]; }
  double value(std::size_t i) const { return values_[i]; }

  /// Linear interpolation; constant extrapolation outside the mesh.
  double interpolate(double r) const;

private:
  std::vector<double> radii_;
  std::vector<double> values_;
};

/// Geometric (log-spaced) mesh from r_min to r_max.
std::vector<double> log_mesh(double r_min, double r_max, int points);

void write_radial_csv(std::ostream& out, const RadialProfile& p,
                      const std::string& value_name = "value");
void write_radial_csv(const std::string& path, const RadialProfile& p,
                      const std::string& value_name = "value");
RadialProfile read_radial_csv(std::istream& in);
RadialProfile read_radial_csv(const std::string& path);

}  // namespace qumond
