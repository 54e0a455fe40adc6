#include "qumond/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qumond/grid.hpp"

namespace qumond::counterexamples {

namespace {

// shell index i with 2^{-i} <= r < 2^{-(i-1)}; requires 0 < r < 2
int shell_index(double r) {
  int i = std::max(0, static_cast<int>(std::floor(-std::log2(r))));
  while (std::exp2(-static_cast<double>(i)) > r) ++i;
  while (i > 0 && std::exp2(-static_cast<double>(i - 1)) <= r) --i;
  return i;
}

}  // namespace

DyadicDensity::DyadicDensity(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("DyadicDensity: n must be >= 1");
  if (n > 100000000) throw std::invalid_argument("DyadicDensity: n too large to resolve shells");
}

double DyadicDensity::rho(double r) const {
  if (!(r > 0.0) || r >= 1.0 + 1.0 / n_) return 0.0;
  if (r >= 1.0) return 1.0 / (4.0 * std::numbers::pi);
  const int i = shell_index(r);
  const double a = std::exp2(-static_cast<double>(i));
  return r < (1.0 + 1.0 / n_) * a ? 1.0 / (4.0 * std::numbers::pi) : 0.0;
}

double DyadicDensity::total_mass() const {
  const double s = 1.0 + 1.0 / n_;
  return (s * s * s - 1.0) / 3.0 * (8.0 / 7.0);
}

double DyadicDensity::mass(double r) const {
  // 4 pi rho_0 = 1, so M(r) = int_{Omega, <r} s^2 ds; shells below index i
  // sum to the closed geometric tail c (8/7) 8^{-(i+1)}.
  if (!(r > 0.0)) return 0.0;
  const double s = 1.0 + 1.0 / n_;
  const double c = (s * s * s - 1.0) / 3.0;
  if (r >= s) return total_mass();
  const int i = r >= 1.0 ? 0 : shell_index(r);
  const double a = std::exp2(-static_cast<double>(i));
  const double b = s * a;
  const double top = std::min(r, b);
  const double partial = top > a ? (top * top * top - a * a * a) / 3.0 : 0.0;
  const double tail = c * (8.0 / 7.0) * std::exp2(-3.0 * (i + 1));
  return partial + tail;
}

spherical::SphericalModel DyadicDensity::model() const {
  spherical::SphericalModel m;
  DyadicDensity self = *this;
  m.rho = [self](double r) { return self.rho(r); };
  m.mass = [self](double r) { return self.mass(r); };
  m.total_mass = total_mass();
  m.support_radius = 1.0 + 1.0 / n_;
  return m;
}

std::vector<double> DyadicDensity::quadrature_mesh(int i_max) const {
  if (i_max < 1) throw std::invalid_argument("quadrature_mesh: i_max must be >= 1");
  const double delta = 1e-9;  // relative endpoint offset; keeps nodes inside/outside a shell
  const double w_thin = std::exp2(-static_cast<double>(i_max)) / n_;
  if (w_thin <= 10.0 * delta * std::exp2(-static_cast<double>(i_max)))
    throw DiagnosticError("quadrature_mesh: mesh too coarse to resolve the thinnest shell");

  const double s = 1.0 + 1.0 / n_;
  std::vector<double> nodes;
  nodes.reserve(static_cast<std::size_t>(i_max + 2) * 20);
  const int k_in = 8, k_out = 6;
  for (int i = i_max; i >= 0; --i) {
    const double a = std::exp2(-static_cast<double>(i));
    const double b = s * a;
    // inside the shell [a, b)
    const double lo = a * (1.0 + delta), hi = b * (1.0 - delta);
    for (int k = 0; k < k_in; ++k)
      nodes.push_back(lo + (hi - lo) * k / (k_in - 1.0));
    // gap up to the next shell (or out to 2 for i = 0)
    const double gap_hi = (i > 0 ? std::exp2(-static_cast<double>(i - 1)) : 2.0);
    const double glo = b * (1.0 + delta), ghi = gap_hi * (i > 0 ? 1.0 - delta : 1.0);
    for (int k = 0; k < k_out; ++k)
      nodes.push_back(glo * std::pow(ghi / glo, k / (k_out - 1.0)));
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

MassBoundReport dyadic_mass_bound_check(int n, int j_max) {
  if (j_max < 1) throw std::invalid_argument("dyadic_mass_bound_check: j_max must be >= 1");
  DyadicDensity d(n);
  MassBoundReport report;
  report.pass = true;
  for (int j = 1; j <= j_max; ++j) {
    MassBoundRow row;
    row.j = j;
    row.mass = d.mass(std::exp2(1.0 - j));
    row.bound = (32.0 / 7.0) / n * std::exp2(-3.0 * j);
    row.pass = row.mass <= row.bound * (1.0 + 1e-12);
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  // N(r) = M(r)/r^3 against the uniform bound 32/(7n)
  const double nr_bound = 32.0 / (7.0 * n);
  const int samples = 400;
  const double r_lo = std::exp2(-static_cast<double>(j_max)), r_hi = 2.0;
  for (int k = 0; k <= samples; ++k) {
    const double r = r_lo * std::pow(r_hi / r_lo, k / static_cast<double>(samples));
    report.max_shell_ratio = std::max(report.max_shell_ratio, d.mass(r) / (r * r * r) / nr_bound);
  }
  report.pass = report.pass && report.max_shell_ratio <= 1.0 + 1e-12;
  return report;
}

BlowupResult blowup_exponent(double q, const std::vector<int>& n_list, int i_max) {
  if (!(q >= 1.0)) throw std::invalid_argument("blowup_exponent: q must be >= 1");
  if (n_list.empty()) throw std::invalid_argument("blowup_exponent: empty n list");
  const mond::InterpolationFunction lam = mond::lambda_deep_mond(1.0);
  BlowupResult result;
  result.q = q;
  for (int n : n_list) {
    DyadicDensity d(n);
    const spherical::SphericalModel model = d.model();
    const std::vector<double> mesh = d.quadrature_mesh(i_max);
    std::vector<double> values(mesh.size());
    for (std::size_t k = 0; k < mesh.size(); ++k)
      values[k] = spherical::mond_laplacian(model, lam, mesh[k]);
    RadialProfile profile(mesh, std::move(values));
    result.points.push_back({n, spherical::lq_norm_radial(profile, q, 2.0)});
  }
  // OLS slope of log norm against log n
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BlowupPoint& p : result.points) {
    const double x = std::log(static_cast<double>(p.n)), y = std::log(p.norm);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(result.points.size());
  const double denom = m * sxx - sx * sx;
  result.slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
  return result;
}

SignedDensity::SignedDensity(int depth) {
  if (depth < 1) throw std::invalid_argument("SignedDensity: depth must be >= 1");
  a_.resize(depth + 2);
  a_[0] = 0.0;
  a_[1] = 2.0;
  for (int n = 1; n <= depth; ++n) a_[n + 1] = a_[n] + 2.0 / ((n + 1.0) * (n + 1.0));
}

double SignedDensity::rho(double r) const {
  if (r < a_[1] || r >= a_.back()) return 0.0;
  const auto it = std::upper_bound(a_.begin() + 1, a_.end(), r);
  const int n = static_cast<int>(it - a_.begin()) - 1;
  const double sign = r < midpoint(n) ? 1.0 : -1.0;
  return sign / (4.0 * std::numbers::pi * r * r);
}

double SignedDensity::mass(double r) const {
  if (r < a_[1] || r >= a_.back()) return 0.0;
  const auto it = std::upper_bound(a_.begin() + 1, a_.end(), r);
  const int n = static_cast<int>(it - a_.begin()) - 1;
  const double m = midpoint(n);
  return r < m ? r - a_[n] : peak(n) - (r - m);
}

spherical::SphericalModel SignedDensity::model() const {
  spherical::SphericalModel m;
  SignedDensity self = *this;
  m.rho = [self](double r) { return self.rho(r); };
  m.mass = [self](double r) { return self.mass(r); };
  m.total_mass = 0.0;  // triangle wave returns to zero at every a_n
  m.support_radius = a_.back();
  return m;
}

SignedDivergenceResult signed_w11_divergence(int N) {
  if (N < 1) throw std::invalid_argument("signed_w11_divergence: N must be >= 1");
  SignedDensity d(N);
  SignedDivergenceResult result;
  result.pass = true;
  double s = 0.0, bound = 0.0;
  for (int n = 1; n <= N; ++n) {
    const double mn = d.midpoint(n);
    s += 8.0 * std::numbers::pi * mn * std::sqrt(d.mass(mn));
    bound += 8.0 * std::numbers::pi / (n + 1.0);
    result.rows.push_back({n, s, bound});
    result.pass = result.pass && s >= bound;
  }
  return result;
}

}  // namespace qumond::counterexamples
