#include "qumond/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>

#include "qumond/convolution.hpp"
#include "qumond/counterexamples.hpp"
#include "qumond/density.hpp"
#include "qumond/fields.hpp"
#include "qumond/grid.hpp"
#include "qumond/helmholtz.hpp"
#include "qumond/mond.hpp"
#include "qumond/newtonian.hpp"
#include "qumond/singular.hpp"
#include "qumond/spherical.hpp"

namespace qumond::verify {

namespace {

struct Context {
  const Options& opts;
  std::vector<CheckResult> results;

  bool wanted(const std::string& id, const std::string& lemma) const {
    if (opts.only.empty()) return true;
    for (const std::string& s : opts.only)
      if (id.find(s) != std::string::npos || lemma.find(s) != std::string::npos) return true;
    return false;
  }

  void add(const std::string& id, const std::string& lemma, double observed, double bound) {
    if (!wanted(id, lemma)) return;
    auto it = opts.tol.find(id);
    if (it != opts.tol.end()) bound = it->second;
    results.push_back({id, lemma, observed, bound, observed <= bound});
  }

  // lazy: skip expensive setup when the whole group is filtered out
  bool group_wanted(const std::vector<std::pair<std::string, std::string>>& ids) const {
    for (const auto& [id, lemma] : ids)
      if (wanted(id, lemma)) return true;
    return false;
  }
};

double rel_l2(const VectorGrid& a, const VectorGrid& ref) {
  VectorGrid d = a;
  d -= ref;
  const double den = l2_norm(ref);
  return den > 0.0 ? l2_norm(d) / den : l2_norm(d);
}

ScalarGrid gaussian_mixture(int n, double L) {
  density::DensityModel m;
  m.kind = density::DensityModel::Kind::Primitives;
  m.primitives = {
      {density::Primitive::Kind::Gaussian, 1.0, 0.22, {0.25, -0.1, 0.15}},
      {density::Primitive::Kind::Gaussian, 0.6, 0.3, {-0.3, 0.2, -0.1}},
      {density::Primitive::Kind::Gaussian, 0.4, 0.18, {0.05, 0.3, -0.25}},
  };
  return m.sample_grid(n, L);
}

// --- criterion 1: Poisson identity --------------------------------------

void check_poisson(Context& ctx, FreeSpaceConvolver& conv) {
  if (!ctx.group_wanted({{"poisson-identity", "lemma-2.3c"}})) return;
  const ScalarGrid g = gaussian_mixture(ctx.opts.n, ctx.opts.half_width);
  const auto sched = singular::EpsilonSchedule::geometric(conv.spacing());
  const newtonian::Hessian hess = newtonian::hessian(conv, g, sched);
  ScalarGrid residual = newtonian::hessian_trace(hess);
  residual -= 4.0 * std::numbers::pi * g;
  ctx.add("poisson-identity", "lemma-2.3c", l2_norm(residual) / l2_norm(g), 1e-3);
}

// --- criterion 2: shell theorem ------------------------------------------

void check_shell_theorem(Context& ctx, FreeSpaceConvolver& conv) {
  if (!ctx.group_wanted({{"shell-theorem", "lemma-2.5"}})) return;
  const double R = 0.5, rho0 = 1.0;
  density::DensityModel m;
  m.kind = density::DensityModel::Kind::Primitives;
  m.primitives = {{density::Primitive::Kind::UniformBall, rho0, R, {0, 0, 0}}};
  const ScalarGrid rho = m.sample_grid(ctx.opts.n, ctx.opts.half_width);
  const VectorGrid field = newtonian::solve_field(conv, rho);
  const spherical::SphericalModel model = m.spherical_model();
  const double h = conv.spacing();

  // direction-averaged probe: 6 faces + 8 corners
  std::vector<Vec3> dirs;
  for (int s : {-1, 1}) {
    dirs.push_back({static_cast<double>(s), 0, 0});
    dirs.push_back({0, static_cast<double>(s), 0});
    dirs.push_back({0, 0, static_cast<double>(s)});
  }
  const double c = 1.0 / std::sqrt(3.0);
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) dirs.push_back({sx * c, sy * c, sz * c});

  // probes stay a couple of cells clear of the surface kink at R, where the
  // trilinear interpolant cannot follow |grad U|
  std::vector<double> radii;
  for (int k = 0; k < 10; ++k)
    radii.push_back(0.15 * std::pow((R - 2.0 * h) / 0.15, k / 9.0));
  for (int k = 0; k < 10; ++k)
    radii.push_back((R + 2.0 * h) * std::pow(1.5 / (R + 2.0 * h), k / 9.0));

  double worst = 0.0;
  for (const double r : radii) {
    double avg = 0.0;
    for (const Vec3& d : dirs) {
      double comp[3];
      for (int a = 0; a < 3; ++a)
        comp[a] = sample_trilinear(field.comp(a), r * d.x, r * d.y, r * d.z);
      avg += std::sqrt(comp[0] * comp[0] + comp[1] * comp[1] + comp[2] * comp[2]);
    }
    avg /= static_cast<double>(dirs.size());
    const double expected = model.mass(r) / (r * r);
    worst = std::max(worst, std::abs(avg - expected) / expected);
  }
  ctx.add("shell-theorem", "lemma-2.5", worst, 0.02);
}

// --- criterion 3: singular trace + kernel cancellation --------------------

void check_singular_trace(Context& ctx, FreeSpaceConvolver& conv) {
  if (ctx.group_wanted({{"singular-trace", "lemma-2.3c"}})) {
    const ScalarGrid g =
        fields::band_limited_scalar(ctx.opts.n, ctx.opts.half_width, ctx.opts.seed + 1);
    const auto sched = singular::EpsilonSchedule::geometric(conv.spacing());
    ScalarGrid sum = singular::t_ij(conv, g, 0, 0, sched);
    sum += singular::t_ij(conv, g, 1, 1, sched);
    sum += singular::t_ij(conv, g, 2, 2, sched);
    ctx.add("singular-trace", "lemma-2.3c", l2_norm(sum) / l2_norm(g), 1e-3);
  }
  if (ctx.group_wanted({{"omega-cancellation", "lemma-2.3c"}})) {
    // Monte-Carlo mean of Omega_ii over the unit sphere, per component
    std::mt19937_64 rng(ctx.opts.seed + 2);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int samples = 100000;
    double mean[3] = {0, 0, 0}, m2[3] = {0, 0, 0};
    for (int k = 1; k <= samples; ++k) {
      double x = gauss(rng), y = gauss(rng), z = gauss(rng);
      const double r = std::sqrt(x * x + y * y + z * z);
      x /= r;
      y /= r;
      z /= r;
      for (int i = 0; i < 3; ++i) {
        const double v = singular::omega(i, i, x, y, z);
        const double d = v - mean[i];
        mean[i] += d / k;
        m2[i] += d * (v - mean[i]);
      }
    }
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double stderr_i = std::sqrt(m2[i] / (samples - 1.0) / samples);
      worst = std::max(worst, std::abs(mean[i]) / stderr_i);
    }
    ctx.add("omega-cancellation", "lemma-2.3c", worst, 3.0);
  }
}

// --- criterion 4: Helmholtz projector -------------------------------------

void check_helmholtz(Context& ctx, FreeSpaceConvolver& conv) {
  const std::vector<std::pair<std::string, std::string>> ids = {
      {"helmholtz-gradient", "lemma-3.4"},   {"helmholtz-solenoidal", "thm-3.3"},
      {"helmholtz-idempotent", "thm-3.3"},   {"helmholtz-spherical", "lemma-3.5"},
      {"helmholtz-symmetry", "lemma-3.6"},   {"helmholtz-divergence", "thm-3.3"}};
  if (!ctx.group_wanted(ids)) return;
  const int n = ctx.opts.n;
  const double L = ctx.opts.half_width;
  const auto sched = singular::EpsilonSchedule::geometric(conv.spacing());

  // gradient fixed point: exact gradient of a compact smooth potential
  {
    VectorGrid v(n, L);
    const double c1[3] = {0.25, -0.1, 0.15}, c2[3] = {-0.3, 0.2, -0.05};
    const double s1 = 0.30, s2 = 0.22;
    for (int iz = 0; iz < n; ++iz)
      for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
          const double p[3] = {v.comp(0).coord(ix), v.comp(0).coord(iy),
                               v.comp(0).coord(iz)};
          double r1 = 0.0, r2 = 0.0;
          for (int a = 0; a < 3; ++a) {
            r1 += (p[a] - c1[a]) * (p[a] - c1[a]);
            r2 += (p[a] - c2[a]) * (p[a] - c2[a]);
          }
          const double g1 = std::exp(-r1 / (2.0 * s1 * s1));
          const double g2 = 0.7 * std::exp(-r2 / (2.0 * s2 * s2));
          for (int a = 0; a < 3; ++a)
            v.comp(a).at(ix, iy, iz) =
                -(p[a] - c1[a]) / (s1 * s1) * g1 - (p[a] - c2[a]) / (s2 * s2) * g2;
        }
    const VectorGrid hv = helmholtz::project_irrotational(conv, v, sched);
    ctx.add("helmholtz-gradient", "lemma-3.4", rel_l2(hv, v), 0.02);
  }
  // solenoidal kernel: H annihilates curl fields
  {
    const VectorGrid w = fields::band_limited_solenoidal(n, L, ctx.opts.seed + 3);
    const VectorGrid hw = helmholtz::project_irrotational(conv, w, sched);
    ctx.add("helmholtz-solenoidal", "thm-3.3", l2_norm(hw) / l2_norm(w), 0.02);
  }
  // idempotence, symmetry, divergence preservation on generic band-limited v
  const VectorGrid v = fields::band_limited_vector(n, L, ctx.opts.seed + 4);
  {
    const VectorGrid hv = helmholtz::project_irrotational(conv, v, sched);
    const VectorGrid hhv = helmholtz::project_irrotational(conv, hv, sched);
    VectorGrid diff = hhv;
    diff -= hv;
    // normalized by |v| as in the idempotence invariant
    ctx.add("helmholtz-idempotent", "thm-3.3", l2_norm(diff) / l2_norm(v), 0.02);
  }
  {
    // spherically symmetric field f(r) x/r is a fixed point
    const VectorGrid s = [&] {
      VectorGrid out(n, L);
      for (int iz = 0; iz < n; ++iz)
        for (int iy = 0; iy < n; ++iy)
          for (int ix = 0; ix < n; ++ix) {
            const double x = out.comp(0).coord(ix), y = out.comp(0).coord(iy),
                         z = out.comp(0).coord(iz);
            const double r2 = x * x + y * y + z * z;
            const double f = std::exp(-r2 / (2.0 * 0.35 * 0.35));  // f(r)/r smooth at 0
            out.comp(0).at(ix, iy, iz) = f * x;
            out.comp(1).at(ix, iy, iz) = f * y;
            out.comp(2).at(ix, iy, iz) = f * z;
          }
      return out;
    }();
    const VectorGrid hs = helmholtz::project_irrotational(conv, s, sched);
    ctx.add("helmholtz-spherical", "lemma-3.5", rel_l2(hs, s), 0.02);
  }
  {
    const VectorGrid w = fields::band_limited_vector(n, L, ctx.opts.seed + 5);
    const auto [vhw, hvw] = helmholtz::inner_product_symmetry_check(conv, v, w, sched);
    const double scale = std::max(std::abs(vhw), std::abs(hvw));
    ctx.add("helmholtz-symmetry", "lemma-3.6",
            scale > 0.0 ? std::abs(vhw - hvw) / scale : 0.0, 0.02);
  }
  ctx.add("helmholtz-divergence", "thm-3.3",
          helmholtz::divergence_preservation_check(conv, v, sched), 0.02);
}

// --- criterion 5: Milgrom potential consistency ---------------------------

void check_milgrom(Context& ctx, FreeSpaceConvolver& conv) {
  if (!ctx.group_wanted({{"milgrom-consistency", "lemma-4.1"}})) return;
  const int n = ctx.opts.n;
  const double L = ctx.opts.half_width;
  density::DensityModel m;
  m.kind = density::DensityModel::Kind::Primitives;
  m.primitives = {{density::Primitive::Kind::Gaussian, 1.0, 0.25, {0, 0, 0}}};
  const ScalarGrid rho = m.sample_grid(n, L);
  const mond::InterpolationFunction lam = mond::lambda_deep_mond(1.0);
  const VectorGrid grad_un = newtonian::solve_field(conv, rho);
  const VectorGrid w = mond::phantom_field(grad_un, lam);

  std::mt19937_64 rng(ctx.opts.seed + 6);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<Vec3> probes;
  while (probes.size() < 10) {
    const Vec3 p{0.7 * uni(rng), 0.7 * uni(rng), 0.7 * uni(rng)};
    const double r = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
    if (r > 0.3 && r < 0.9) probes.push_back(p);
  }
  const double step = conv.spacing();
  std::vector<Vec3> stencil;
  for (const Vec3& p : probes) {
    stencil.push_back({p.x + step, p.y, p.z});
    stencil.push_back({p.x - step, p.y, p.z});
    stencil.push_back({p.x, p.y + step, p.z});
    stencil.push_back({p.x, p.y - step, p.z});
    stencil.push_back({p.x, p.y, p.z + step});
    stencil.push_back({p.x, p.y, p.z - step});
  }
  const std::vector<double> u = mond::milgrom_potential(conv, rho, lam, stencil);
  double worst = 0.0;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const double* s = &u[6 * k];
    const Vec3 grad{(s[0] - s[1]) / (2 * step), (s[2] - s[3]) / (2 * step),
                    (s[4] - s[5]) / (2 * step)};
    const Vec3 expect = sample_trilinear(w, probes[k].x, probes[k].y, probes[k].z);
    const double dx = grad.x - expect.x, dy = grad.y - expect.y, dz = grad.z - expect.z;
    const double num = std::sqrt(dx * dx + dy * dy + dz * dz);
    const double den =
        std::sqrt(expect.x * expect.x + expect.y * expect.y + expect.z * expect.z);
    worst = std::max(worst, num / den);
  }
  ctx.add("milgrom-consistency", "lemma-4.1", worst, 0.03);
}

// --- criterion 6: weak PDE -------------------------------------------------

void check_weak_pde(Context& ctx, FreeSpaceConvolver& conv) {
  if (!ctx.group_wanted({{"weak-pde", "lemma-4.3"}})) return;
  const int n = ctx.opts.n;
  const double L = ctx.opts.half_width;
  density::DensityModel m;
  m.kind = density::DensityModel::Kind::Primitives;
  m.primitives = {
      {density::Primitive::Kind::UniformBall, 1.0, 0.35, {0.3, 0.1, -0.15}},
      {density::Primitive::Kind::UniformBall, 0.5, 0.25, {-0.35, -0.2, 0.2}},
  };
  const ScalarGrid rho = m.sample_grid(n, L);
  const mond::InterpolationFunction lam = mond::lambda_deep_mond(1.0);
  const auto sched = singular::EpsilonSchedule::geometric(conv.spacing());

  std::mt19937_64 rng(ctx.opts.seed + 7);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<ScalarGrid> testfns;
  for (int k = 0; k < 5; ++k) {
    const Vec3 c{0.5 * uni(rng), 0.5 * uni(rng), 0.5 * uni(rng)};
    const double width = 0.35 + 0.15 * std::abs(uni(rng));
    testfns.push_back(fields::bump_test_function(n, L, c, width));
  }
  const std::vector<double> gaps = mond::weak_pde_residual(conv, rho, lam, testfns, sched);
  ctx.add("weak-pde", "lemma-4.3", *std::max_element(gaps.begin(), gaps.end()), 3e-2);
}

// --- criterion 7: regularity envelope (Lemma 5.3) --------------------------

void check_regularity(Context& ctx) {
  const std::vector<std::pair<std::string, std::string>> ids = {
      {"regularity-envelope", "lemma-5.3"}, {"regularity-slope", "lemma-5.3"}};
  if (!ctx.group_wanted(ids)) return;
  const mond::InterpolationFunction lam = mond::lambda_deep_mond(1.0);
  std::mt19937_64 rng(ctx.opts.seed + 8);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  auto norm_at = [&](const spherical::SphericalModel& model, int points) {
    const std::vector<double> mesh = log_mesh(1e-3, 4.0, points);
    std::vector<double> vals(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i)
      vals[i] = spherical::mond_laplacian(model, lam, mesh[i]);
    return spherical::lq_norm_radial(RadialProfile(mesh, std::move(vals)), 1.5, 4.0);
  };

  double worst_ratio = 0.0, worst_slope = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    // random bounded spherical density: sum of three radial bumps inside B_3
    std::vector<double> c(3), r0(3), w(3);
    double rho_inf = 0.0;
    for (int k = 0; k < 3; ++k) {
      c[k] = 0.2 + 0.8 * uni(rng);
      r0[k] = 0.2 + 2.3 * uni(rng);
      w[k] = 0.15 + 0.35 * uni(rng);
    }
    const std::vector<double> mesh = log_mesh(1e-3, 4.0, 1200);
    std::vector<double> rho_vals(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) {
      double v = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double d = (mesh[i] - r0[k]) / w[k];
        v += c[k] * std::exp(-d * d);
      }
      rho_vals[i] = v;
      rho_inf = std::max(rho_inf, v);
    }
    const spherical::SphericalModel model =
        spherical::SphericalModel::from_profile(RadialProfile(mesh, rho_vals));
    const double coarse = norm_at(model, 2000);
    const double fine = norm_at(model, 4000);
    worst_ratio = std::max(worst_ratio, fine / std::sqrt(rho_inf));
    worst_slope = std::max(worst_slope, std::log(fine / coarse) / std::log(2.0));
  }
  // fixed recorded envelope constant for ||Delta U^M||_{1.5} / ||rho||_inf^{1/2}
  // envelope recorded from the seed-pinned family (worst observed ~200)
  ctx.add("regularity-envelope", "lemma-5.3", worst_ratio, 300.0);
  ctx.add("regularity-slope", "lemma-5.3", worst_slope, 0.05);
}

// --- criterion 8: blowup exponents -----------------------------------------

void check_blowup(Context& ctx) {
  struct Case {
    double q;
    double slope_min;  // <0 means "bounded" check (slope <= bound instead)
    double slope_max;
    const char* id;
  };
  const std::vector<Case> cases = {
      {4.0, 0.20, 0.0, "blowup-q4"},
      {3.0, 0.13, 0.0, "blowup-q3"},
      {1.5, 0.0, 0.05, "blowup-q1.5"},
  };
  const std::vector<int> n_list = {4, 8, 16, 32, 64};
  for (const Case& c : cases) {
    if (!ctx.wanted(c.id, "lemma-5.4")) continue;
    if (ctx.opts.only_q > 0.0 && std::abs(ctx.opts.only_q - c.q) > 1e-12) continue;
    const counterexamples::BlowupResult res =
        counterexamples::blowup_exponent(c.q, n_list, ctx.opts.blowup_i_max);
    if (c.slope_min > 0.0) {
      // growth check: report -slope so "observed <= bound" keeps one polarity
      ctx.add(c.id, "lemma-5.4", -res.slope, -c.slope_min);
    } else {
      ctx.add(c.id, "lemma-5.4", res.slope, c.slope_max);
    }
  }
}

// --- criterion 9: signed density divergence ---------------------------------

void check_signed(Context& ctx) {
  if (ctx.group_wanted({{"signed-divergence", "lemma-5.5"}})) {
    const auto res = counterexamples::signed_w11_divergence(10000);
    double worst = 0.0;  // max of (bound - S_n), should stay <= 0
    for (const auto& row : res.rows)
      worst = std::max(worst, row.harmonic_bound - row.partial_sum);
    ctx.add("signed-divergence", "lemma-5.5", worst, 0.0);
  }
  if (ctx.group_wanted({{"signed-log-growth", "lemma-5.5"}})) {
    const int N = 1000;
    const auto res = counterexamples::signed_w11_divergence(2 * N);
    const double sN = res.rows[N - 1].partial_sum;
    const double s2N = res.rows[2 * N - 1].partial_sum;
    const double expect = std::log(2.0 * N) / std::log(static_cast<double>(N));
    ctx.add("signed-log-growth", "lemma-5.5", std::abs(s2N / sN - expect) / expect, 0.10);
  }
}

// --- criterion 10: deep-MOND asymptote ---------------------------------------

void check_deep_mond(Context& ctx) {
  if (!ctx.group_wanted({{"deep-mond-asymptote", "section-1"}})) return;
  const mond::InterpolationFunction lam = mond::lambda_deep_mond(1.0);
  struct ModelSpec {
    density::Primitive::Kind kind;
    double mass, size;
  };
  const std::vector<ModelSpec> specs = {
      {density::Primitive::Kind::UniformBall, 1.0, 2.5},
      {density::Primitive::Kind::Gaussian, 0.3, 0.35},
      {density::Primitive::Kind::UniformBall, 0.1, 1.0},
  };
  double worst = 0.0;
  for (const ModelSpec& s : specs) {
    density::DensityModel m;
    m.kind = density::DensityModel::Kind::Primitives;
    density::Primitive p;
    p.kind = s.kind;
    if (s.kind == density::Primitive::Kind::UniformBall) {
      p.p1 = s.size;
      p.p0 = s.mass / (4.0 / 3.0 * std::numbers::pi * s.size * s.size * s.size);
    } else {
      p.p0 = s.mass;
      p.p1 = s.size;
    }
    m.primitives = {p};
    const spherical::SphericalModel model = m.spherical_model();
    const double r = 100.0 * m.support_radius();
    const double v = spherical::circular_velocity(model, lam, r);
    worst = std::max(worst, std::abs(v * v * v * v / (lam.a0 * s.mass) - 1.0));
  }
  ctx.add("deep-mond-asymptote", "section-1", worst, 0.01);
}

// --- criterion 11: lambda admissibility + Hoelder ----------------------------

void check_lambda(Context& ctx) {
  const mond::InterpolationFunction lam = mond::lambda_deep_mond(1.0);
  if (ctx.group_wanted({{"lambda-admissibility", "lemma-5.2"}})) {
    double observed = 0.0;
    try {
      lam.validate();
    } catch (const DiagnosticError&) {
      observed = 1.0;
    }
    ctx.add("lambda-admissibility", "lemma-5.2", observed, 0.0);
  }
  if (ctx.group_wanted({{"holder-stability", "lemma-5.2"}})) {
    auto sup_ratio = [&](int pairs, std::uint64_t seed) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> uni(-2.0, 2.0);
      double sup = 0.0;
      for (int k = 0; k < pairs; ++k) {
        const Vec3 u{uni(rng), uni(rng), uni(rng)};
        const Vec3 v{uni(rng), uni(rng), uni(rng)};
        sup = std::max(sup, mond::holder_vector_check(lam, u, v));
      }
      return sup;
    };
    const double s1 = sup_ratio(100000, ctx.opts.seed + 9);
    const double s2 = sup_ratio(200000, ctx.opts.seed + 9);
    ctx.add("holder-stability", "lemma-5.2", std::abs(s2 - s1) / s1, 0.05);
  }
}

}  // namespace

std::vector<CheckResult> run_checks(const Options& opts) {
  Context ctx{opts, {}};
  // grid-based checks share one convolver (and its kernel cache)
  const std::vector<std::pair<std::string, std::string>> grid_ids = {
      {"poisson", "lemma-2.3c"},  {"shell", "lemma-2.5"},    {"singular", "lemma-2.3c"},
      {"omega", "lemma-2.3c"},    {"helmholtz", "thm-3.3"},  {"helmholtz", "lemma-3.4"},
      {"helmholtz", "lemma-3.5"}, {"helmholtz", "lemma-3.6"}, {"milgrom", "lemma-4.1"},
      {"weak-pde", "lemma-4.3"}};
  if (ctx.group_wanted(grid_ids)) {
    FreeSpaceConvolver conv(opts.n, opts.half_width);
    check_poisson(ctx, conv);
    check_shell_theorem(ctx, conv);
    check_singular_trace(ctx, conv);
    check_helmholtz(ctx, conv);
    check_milgrom(ctx, conv);
    check_weak_pde(ctx, conv);
  }
  check_regularity(ctx);
  check_blowup(ctx);
  check_signed(ctx);
  check_deep_mond(ctx);
  check_lambda(ctx);
  return ctx.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

void write_report_csv(std::ostream& out, const std::vector<CheckResult>& results,
                      std::uint64_t seed) {
  out << "# seed=" << seed << "\n";
  out << "check_id,lemma,observed,bound,pass\n";
  out.precision(12);
  for (const CheckResult& r : results)
    out << r.check_id << ',' << r.lemma << ',' << r.observed << ',' << r.bound << ','
        << (r.pass ? 1 : 0) << '\n';
}

}  // namespace qumond::verify
