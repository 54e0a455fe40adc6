#include "qumond/radial.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qumond {

RadialProfile::RadialProfile(std::vector<double> radii, std::vector<double> values)
    : radii_(std::move(radii)), values_(std::move(values)) {
  if (radii_.size() != values_.size())
    throw std::invalid_argument("RadialProfile: radii/values size mismatch");
  if (radii_.empty()) throw std::invalid_argument("RadialProfile: empty");
  double prev = 0.0;
  for (double r : radii_) {
    if (!(r > prev)) throw std::invalid_argument("RadialProfile: radii must be strictly increasing and positive");
    prev = r;
  }
  for (double v : values_)
    if (!std::isfinite(v)) throw std::invalid_argument("RadialProfile: non-finite value");
}

double RadialProfile::interpolate(double r) const {
  if (r <= radii_.front()) return values_.front();
  if (r >= radii_.back()) return values_.back();
  auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
  const std::size_t hi = it - radii_.begin();
  const std::size_t lo = hi - 1;
  const double t = (r - radii_[lo]) / (radii_[hi] - radii_[lo]);
  return values_[lo] + t * (values_[hi] - values_[lo]);
}

std::vector<double> log_mesh(double r_min, double r_max, int points) {
  if (!(r_min > 0.0) || !(r_max > r_min) || points < 2)
    throw std::invalid_argument("log_mesh: need 0 < r_min < r_max and points >= 2");
  std::vector<double> r(points);
  const double a = std::log(r_min), b = std::log(r_max);
  for (int i = 0; i < points; ++i) r[i] = std::exp(a + (b - a) * i / (points - 1));
  r.front() = r_min;
  r.back() = r_max;
  return r;
}

void write_radial_csv(std::ostream& out, const RadialProfile& p, const std::string& value_name) {
  out << "r," << value_name << "\n";
  out.precision(17);
  for (std::size_t i = 0; i < p.size(); ++i) out << p.radius(i) << "," << p.value(i) << "\n";
}

void write_radial_csv(const std::string& path, const RadialProfile& p,
                      const std::string& value_name) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_radial_csv(out, p, value_name);
}

RadialProfile read_radial_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("radial csv: empty input");
  std::vector<double> r, v;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b))
      throw std::runtime_error("radial csv: malformed row '" + line + "'");
    r.push_back(std::stod(a));
    v.push_back(std::stod(b));
  }
  return RadialProfile(std::move(r), std::move(v));
}

RadialProfile read_radial_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_radial_csv(in);
}

}  // namespace qumond
