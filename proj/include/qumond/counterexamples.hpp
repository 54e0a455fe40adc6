#pragma once

#include <vector>

#include "qumond/radial.hpp"
#include "qumond/spherical.hpp"

namespace qumond::counterexamples {

/// Dyadic-shell density rho_n(r) = (1/4 pi) 1_Omega(r) with
/// Omega = union over i >= 0 of [2^-i, (1+1/n) 2^-i). The enclosed mass is
/// evaluated analytically (closed geometric tail); no mesh sampling of the
/// indicator is involved.
class DyadicDensity {
public:
  explicit DyadicDensity(int n);

  int thinness() const { return n_; }
  double rho(double r) const;
  double mass(double r) const;
  double total_mass() const;
  spherical::SphericalModel model() const;

  /// Mesh with paired nodes at every shell endpoint down to depth i_max,
  /// plus interior fill, for radial L^q quadrature of the Laplacian.
  std::vector<double> quadrature_mesh(int i_max) const;

private:
  int n_;
};

struct MassBoundRow {
  int j;
  double mass;   // exact M_n(2^{-j+1})
  double bound;  // (32/7)/n * 8^{-j}
  bool pass;
};

struct MassBoundReport {
  std::vector<MassBoundRow> rows;
  double max_shell_ratio = 0.0;  // max over sampled r of N(r) / (32/(7n))
  bool pass = false;
};

/// Checks M_n(2^{-j+1}) <= (32/7)/n 8^{-j} for j = 1..j_max and
/// N(r) <= 32/(7n) on sampled radii.
MassBoundReport dyadic_mass_bound_check(int n, int j_max);

struct BlowupPoint {
  int n;
  double norm;  // || Delta U^M_{rho_n} ||_{L^q(B_2)}
};

struct BlowupResult {
  double q = 0.0;
  std::vector<BlowupPoint> points;
  double slope = 0.0;  // OLS slope of log norm vs log n
};

/// L^q(B_2) norms of the Mondian Laplacian over the dyadic family and the
/// fitted log-log growth exponent (theory: 1/2 - 1/q for 2 < q < 6).
BlowupResult blowup_exponent(double q, const std::vector<int>& n_list, int i_max = 20);

/// Signed density of the W^{1,1} counterexample: shells between
/// a_n = sum_{i<=n} 2/i^2, with M(a_n) = 0 and M(m_n) = 1/(n+1)^2.
class SignedDensity {
public:
  explicit SignedDensity(int depth);

  int depth() const { return static_cast<int>(a_.size()) - 1; }
  double a(int n) const { return a_.at(n); }      // n >= 1
  double midpoint(int n) const { return a_.at(n) + peak(n); }
  double peak(int n) const { return 1.0 / ((n + 1.0) * (n + 1.0)); }
  double rho(double r) const;
  double mass(double r) const;
  spherical::SphericalModel model() const;

private:
  std::vector<double> a_;  // a_[0] unused, a_[1] = 2
};

struct SignedDivergenceRow {
  int n;
  double partial_sum;     // S_n = 8 pi sum_{k<=n} m_k sqrt(M(m_k))
  double harmonic_bound;  // 8 pi sum_{k<=n} 1/(k+1)
};

struct SignedDivergenceResult {
  std::vector<SignedDivergenceRow> rows;  // one per n = 1..N
  bool pass = false;                      // S_n >= bound for all n
};

SignedDivergenceResult signed_w11_divergence(int N);

}  // namespace qumond::counterexamples
