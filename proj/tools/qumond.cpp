// Batch front end: density ingestion, solvers, verification suite, and
// plot-ready CSV emission. Exit codes: 0 ok, 2 config error, 3 numerical
// diagnostic failure.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qumond/counterexamples.hpp"
#include "qumond/density.hpp"
#include "qumond/grid.hpp"
#include "qumond/grid_io.hpp"
#include "qumond/helmholtz.hpp"
#include "qumond/mond.hpp"
#include "qumond/newtonian.hpp"
#include "qumond/radial.hpp"
#include "qumond/singular.hpp"
#include "qumond/spherical.hpp"
#include "qumond/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDiagnostic = 3;

struct CommonOpts {
  int n = 64;
  double L = 2.0;
  std::string density = "zero";
  std::string lambda = "deep:1";
  std::string eps_schedule;  // comma list, multiples of h; empty = default 4,2,1
  std::string out = ".";
  std::uint64_t seed = 20260823;
  std::vector<std::string> tol;  // name=value
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "cells per axis (even, >= 4)");
  cmd->add_option("--L", o.L, "half-width of the cubic domain");
  cmd->add_option("--density", o.density,
                  "density spec: uniform-ball:rho0,R[,cx,cy,cz], gaussian:M,sigma[,...], "
                  "sums with '+', dyadic:n, signed:N, profile:file.csv, zero");
  cmd->add_option("--lambda", o.lambda, "interpolation function, name:a0 (deep:1)");
  cmd->add_option("--eps-schedule", o.eps_schedule,
                  "comma list of truncation radii in units of h (default 4,2,1)");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--seed", o.seed, "seed recorded in output headers");
  cmd->add_option("--tol", o.tol, "tolerance override name=value (repeatable)");
}

qumond::mond::InterpolationFunction parse_lambda(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  double a0 = 1.0;
  if (colon != std::string::npos) {
    try {
      a0 = std::stod(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("lambda: bad a0 in '" + spec + "'");
    }
  }
  if (name != "deep") throw std::invalid_argument("lambda: unknown name '" + name + "'");
  return qumond::mond::lambda_deep_mond(a0);
}

qumond::singular::EpsilonSchedule parse_schedule(const std::string& spec, double h) {
  if (spec.empty()) return qumond::singular::EpsilonSchedule::geometric(h);
  qumond::singular::EpsilonSchedule sched;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      sched.eps.push_back(std::stod(tok) * h);
    } catch (const std::exception&) {
      throw std::invalid_argument("eps-schedule: bad entry '" + tok + "'");
    }
  }
  sched.validate(h);
  return sched;
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& entries) {
  std::map<std::string, double> out;
  for (const std::string& e : entries) {
    const std::size_t eq = e.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("tol: expected name=value, got '" + e + "'");
    try {
      out[e.substr(0, eq)] = std::stod(e.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("tol: bad value in '" + e + "'");
    }
  }
  return out;
}

std::ofstream open_out(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/" + name;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  return out;
}

int cmd_solve(const CommonOpts& o) {
  std::filesystem::create_directories(o.out);
  const qumond::density::DensityModel model = qumond::density::parse_density(o.density);
  const qumond::mond::InterpolationFunction lam = parse_lambda(o.lambda);
  const qumond::ScalarGrid rho = model.sample_grid(o.n, o.L);
  qumond::FreeSpaceConvolver conv(o.n, o.L);
  const auto sched = parse_schedule(o.eps_schedule, conv.spacing());

  const qumond::newtonian::NewtonianSolution newton = qumond::newtonian::solve(conv, rho);
  const qumond::VectorGrid phantom = qumond::mond::phantom_field(newton.field, lam);
  qumond::VectorGrid grad_um =
      qumond::helmholtz::project_irrotational(conv, phantom, sched);
  grad_um += newton.field;

  qumond::write_grid(o.out + "/rho.grid", rho);
  qumond::write_grid(o.out + "/un.grid", newton.potential);
  qumond::write_grid(o.out + "/grad_un.grid", newton.field);
  qumond::write_grid(o.out + "/phantom.grid", phantom);
  qumond::write_grid(o.out + "/grad_um.grid", grad_um);

  std::ofstream summary = open_out(o.out, "summary.csv");
  summary.precision(12);
  summary << "# seed=" << o.seed << "\n";
  summary << "key,value\n";
  summary << "n," << o.n << "\nL," << o.L << "\nh," << conv.spacing() << "\n";
  summary << "density," << o.density << "\nlambda," << o.lambda << "\n";
  summary << "total_mass," << qumond::integrate(rho) << "\n";
  summary << "l2_un," << qumond::l2_norm(newton.potential) << "\n";
  summary << "l2_grad_un," << qumond::l2_norm(newton.field) << "\n";
  summary << "l2_phantom," << qumond::l2_norm(phantom) << "\n";
  summary << "l2_grad_um," << qumond::l2_norm(grad_um) << "\n";
  return kExitOk;
}

int cmd_decompose(const CommonOpts& o, const std::string& input) {
  std::filesystem::create_directories(o.out);
  const qumond::VectorGrid v = qumond::read_vector_grid(input);
  qumond::FreeSpaceConvolver conv(v.n(), v.half_width());
  const auto sched = parse_schedule(o.eps_schedule, conv.spacing());
  const qumond::helmholtz::Decomposition dec = qumond::helmholtz::decompose(conv, v, sched);

  qumond::write_grid(o.out + "/irrotational.grid", dec.irrotational);
  qumond::write_grid(o.out + "/solenoidal.grid", dec.solenoidal);
  std::ofstream report = open_out(o.out, "residuals.csv");
  report.precision(12);
  report << "# seed=" << o.seed << "\n";
  report << "key,value\n";
  report << "curl_residual," << dec.curl_residual << "\n";
  report << "div_residual," << dec.div_residual << "\n";
  report << "l2_input," << qumond::l2_norm(dec.input) << "\n";
  report << "l2_irrotational," << qumond::l2_norm(dec.irrotational) << "\n";
  report << "l2_solenoidal," << qumond::l2_norm(dec.solenoidal) << "\n";
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::vector<std::string>& only, double only_q,
               bool to_stdout) {
  qumond::verify::Options opts;
  opts.n = o.n;
  opts.half_width = o.L;
  opts.seed = o.seed;
  opts.only = only;
  opts.only_q = only_q;
  opts.tol = parse_tols(o.tol);
  const std::vector<qumond::verify::CheckResult> results = qumond::verify::run_checks(opts);
  if (to_stdout) qumond::verify::write_report_csv(std::cout, results, o.seed);
  std::ofstream out = open_out(o.out, "report.csv");
  qumond::verify::write_report_csv(out, results, o.seed);
  return qumond::verify::all_passed(results) ? kExitOk : kExitDiagnostic;
}

int cmd_rotation(const CommonOpts& o, double r_min, double r_max, int points) {
  const qumond::density::DensityModel model = qumond::density::parse_density(o.density);
  if (!model.is_spherical())
    throw std::invalid_argument("rotation: density must be spherically symmetric");
  const qumond::mond::InterpolationFunction lam = parse_lambda(o.lambda);
  const qumond::spherical::SphericalModel sph = model.spherical_model();

  const double support = model.support_radius();
  if (r_min <= 0.0) r_min = std::max(1e-3, 0.05 * support);
  if (r_max <= 0.0) r_max = support > 0.0 ? 100.0 * support : 100.0;

  std::ofstream out = open_out(o.out, "rotation.csv");
  out.precision(12);
  out << "# seed=" << o.seed << "\n";
  out << "r,v_newton,v_mond\n";
  for (double r : qumond::log_mesh(r_min, r_max, points)) {
    out << r << ',' << qumond::spherical::circular_velocity(sph, lam, r, true) << ','
        << qumond::spherical::circular_velocity(sph, lam, r, false) << '\n';
  }
  return kExitOk;
}

int cmd_counterexample(const CommonOpts& o, const std::string& family, double q,
                       std::vector<int> n_list, int i_max, int depth) {
  if (family == "dyadic") {
    if (n_list.empty()) n_list = {4, 8, 16, 32, 64};
    const auto res = qumond::counterexamples::blowup_exponent(q, n_list, i_max);
    std::ofstream out = open_out(o.out, "blowup.csv");
    out.precision(12);
    out << "# seed=" << o.seed << " slope=" << res.slope << "\n";
    out << "n,q,norm\n";
    for (const auto& p : res.points) out << p.n << ',' << q << ',' << p.norm << '\n';
    return kExitOk;
  }
  if (family == "signed") {
    const auto res = qumond::counterexamples::signed_w11_divergence(depth);
    std::ofstream out = open_out(o.out, "signed.csv");
    out.precision(12);
    out << "# seed=" << o.seed << "\n";
    out << "N,S_N,harmonic_bound\n";
    for (const auto& row : res.rows)
      out << row.n << ',' << row.partial_sum << ',' << row.harmonic_bound << '\n';
    return res.pass ? kExitOk : kExitDiagnostic;
  }
  throw std::invalid_argument("counterexample: unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QUMOND potential solver and regularity verification suite"};
  app.require_subcommand(1);
  app.set_config("--config")->description("key=value config file; flags override");

  CommonOpts solve_o, dec_o, ver_o, rot_o, ctr_o;

  CLI::App* solve = app.add_subcommand("solve", "Newtonian + MOND fields for a density");
  add_common(solve, solve_o);

  CLI::App* dec = app.add_subcommand("decompose", "Helmholtz-Weyl split of a vector grid");
  add_common(dec, dec_o);
  std::string dec_input;
  dec->add_option("--input", dec_input, "vector grid dump to decompose")->required();

  CLI::App* ver = app.add_subcommand("verify", "run the acceptance check suite");
  add_common(ver, ver_o);
  std::vector<std::string> ver_only;
  double ver_q = 0.0;
  bool ver_quiet = false;
  ver->add_option("--only", ver_only, "restrict to checks matching id/lemma substring");
  ver->add_option("--q", ver_q, "restrict blowup checks to this exponent");
  ver->add_flag("--quiet", ver_quiet, "suppress stdout report (file is always written)");

  CLI::App* rot = app.add_subcommand("rotation", "rotation curve of a spherical density");
  add_common(rot, rot_o);
  double r_min = 0.0, r_max = 0.0;
  int rot_points = 64;
  rot->add_option("--r-min", r_min, "innermost radius (default 0.05 x support)");
  rot->add_option("--r-max", r_max, "outermost radius (default 100 x support)");
  rot->add_option("--points", rot_points, "number of log-spaced radii");

  CLI::App* ctr = app.add_subcommand("counterexample", "dyadic blowup / signed divergence data");
  add_common(ctr, ctr_o);
  std::string family = "dyadic";
  double ctr_q = 4.0;
  std::vector<int> ctr_n_list;
  int ctr_i_max = 20, ctr_depth = 1000;
  ctr->add_option("--family", family, "dyadic or signed");
  ctr->add_option("--q", ctr_q, "L^q exponent for the dyadic family");
  ctr->add_option("--n-list", ctr_n_list, "dyadic thinness parameters");
  ctr->add_option("--i-max", ctr_i_max, "dyadic shell truncation depth");
  ctr->add_option("--N", ctr_depth, "signed-family truncation depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_o);
    if (dec->parsed()) return cmd_decompose(dec_o, dec_input);
    if (ver->parsed()) return cmd_verify(ver_o, ver_only, ver_q, !ver_quiet);
    if (rot->parsed()) return cmd_rotation(rot_o, r_min, r_max, rot_points);
    if (ctr->parsed())
      return cmd_counterexample(ctr_o, family, ctr_q, ctr_n_list, ctr_i_max, ctr_depth);
  } catch (const qumond::DiagnosticError& e) {
    std::cerr << "diagnostic failure: " << e.what() << "\n";
    return kExitDiagnostic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
