#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qumond/grid.hpp"
#include "qumond/grid_io.hpp"

namespace fs = std::filesystem;
using namespace qumond;

namespace {

std::string cli() {
  const char* p = std::getenv("QUMOND_CLI");
  REQUIRE_MESSAGE(p != nullptr, "QUMOND_CLI must point at the cli binary");
  return p;
}

int run(const std::string& args) {
  const std::string cmd = cli() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return (status >> 8) & 0xff;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("qumond_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), ("missing file " + p.string()));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// value of a key,value row in a summary-style csv
std::string csv_value(const std::string& body, const std::string& key) {
  std::stringstream ss(body);
  std::string line;
  while (std::getline(ss, line))
    if (line.rfind(key + ",", 0) == 0) return line.substr(key.size() + 1);
  return "";
}

}  // namespace

TEST_CASE("solve: end-to-end dumps and summary") {
  const fs::path dir = fresh_dir("solve");
  CHECK(run("solve --density uniform-ball:1,0.5 --n 32 --L 2 --lambda deep:1 --out " +
            dir.string()) == 0);
  for (const char* f : {"rho.grid", "un.grid", "grad_un.grid", "phantom.grid",
                        "grad_um.grid", "summary.csv"})
    CHECK(fs::exists(dir / f));

  const ScalarGrid rho = read_scalar_grid((dir / "rho.grid").string());
  CHECK(rho.n() == 32);
  CHECK(rho.half_width() == 2.0);
  // uniform-ball:rho0,R -> total mass rho0 (4 pi / 3) R^3 = pi/6, up to the
  // staircase error of sampling the sharp edge on the grid
  CHECK(integrate(rho) == doctest::Approx(M_PI / 6.0).epsilon(0.01));

  const std::string summary = slurp(dir / "summary.csv");
  CHECK(csv_value(summary, "n") == "32");
  CHECK(std::stod(csv_value(summary, "total_mass")) == doctest::Approx(M_PI / 6.0).epsilon(0.01));
  CHECK(std::stod(csv_value(summary, "l2_grad_um")) > 0.0);
}

TEST_CASE("solve: config errors and zero density") {
  const fs::path dir = fresh_dir("solve_err");
  CHECK(run("solve --density none --out " + dir.string()) == 2);
  CHECK(run("solve --density uniform-ball:bogus --out " + dir.string()) == 2);
  CHECK(run("solve --n 7 --density zero --out " + dir.string()) == 2);  // odd n
  CHECK(run("nonsense-subcommand") == 2);

  const fs::path zdir = fresh_dir("solve_zero");
  CHECK(run("solve --density zero --n 16 --out " + zdir.string()) == 0);
  CHECK(l2_norm(read_scalar_grid((zdir / "un.grid").string())) == 0.0);
  CHECK(l2_norm(read_vector_grid((zdir / "grad_um.grid").string())) == 0.0);
}

TEST_CASE("solve: identical config gives byte-identical outputs") {
  const fs::path d1 = fresh_dir("repeat1");
  const fs::path d2 = fresh_dir("repeat2");
  const std::string args = "solve --density gaussian:1,0.3 --n 32 --out ";
  CHECK(run(args + d1.string()) == 0);
  CHECK(run(args + d2.string()) == 0);
  for (const char* f : {"rho.grid", "un.grid", "grad_un.grid", "phantom.grid",
                        "grad_um.grid", "summary.csv"})
    CHECK(slurp(d1 / f) == slurp(d2 / f));
}

TEST_CASE("decompose: roundtrip on a gradient field and on zero") {
  const fs::path dir = fresh_dir("decompose");
  const int n = 32;
  const double L = 2.0, s = 0.3;
  VectorGrid v(n, L);
  for (int k = 0; k < 3; ++k)
    v.comp(k) = ScalarGrid::from_function(n, L, [k, s](double x, double y, double z) {
      const double c[3] = {x, y, z};
      return -c[k] / (s * s) * std::exp(-(x * x + y * y + z * z) / (2.0 * s * s));
    });
  const fs::path input = dir / "input.grid";
  write_grid(input.string(), v);

  CHECK(run("decompose --input " + input.string() + " --out " + dir.string()) == 0);
  const VectorGrid irr = read_vector_grid((dir / "irrotational.grid").string());
  const VectorGrid sol = read_vector_grid((dir / "solenoidal.grid").string());
  CHECK(l2_norm(sol) <= 0.03 * l2_norm(v));  // gradient input: tiny solenoidal part
  VectorGrid sum = irr;
  sum += sol;
  sum -= v;
  CHECK(l2_norm(sum) <= 1e-13 * l2_norm(v));

  const std::string report = slurp(dir / "residuals.csv");
  CHECK(std::stod(csv_value(report, "curl_residual")) <= 0.1);
  CHECK(std::stod(csv_value(report, "l2_solenoidal")) <= 0.03 * l2_norm(v));

  // zero input
  const fs::path zdir = fresh_dir("decompose_zero");
  VectorGrid z(16, 1.0);
  write_grid((zdir / "z.grid").string(), z);
  CHECK(run("decompose --input " + (zdir / "z.grid").string() + " --out " + zdir.string()) ==
        0);
  CHECK(l2_norm(read_vector_grid((zdir / "irrotational.grid").string())) == 0.0);
  CHECK(l2_norm(read_vector_grid((zdir / "solenoidal.grid").string())) == 0.0);

  CHECK(run("decompose --input /nonexistent.grid --out " + zdir.string()) == 2);
}

TEST_CASE("verify: subset run, report format, forced failure") {
  const fs::path dir = fresh_dir("verify");
  CHECK(run("verify --only poisson --n 32 --quiet --out " + dir.string()) == 0);
  const std::string report = slurp(dir / "report.csv");
  CHECK(report.find("check_id,lemma,observed,bound,pass") != std::string::npos);
  CHECK(report.find("poisson-identity,lemma-2.3c,") != std::string::npos);
  CHECK(report.find(",1\n") != std::string::npos);

  // --only by lemma tag + --q restriction hits the single bounded blowup check
  CHECK(run("verify --only lemma-5.4 --q 1.5 --quiet --out " + dir.string()) == 0);
  const std::string blow = slurp(dir / "report.csv");
  CHECK(blow.find("blowup-q1.5") != std::string::npos);
  CHECK(blow.find("blowup-q4") == std::string::npos);

  // zero tolerance forces the failure/reporting path: exit code 3
  CHECK(run("verify --only shell --n 32 --tol shell-theorem=0 --quiet --out " +
            dir.string()) == 3);

  // identical config -> byte-identical report
  const fs::path d2 = fresh_dir("verify2");
  CHECK(run("verify --only poisson --n 32 --quiet --out " + d2.string()) == 0);
  const fs::path d3 = fresh_dir("verify3");
  CHECK(run("verify --only poisson --n 32 --quiet --out " + d3.string()) == 0);
  CHECK(slurp(d2 / "report.csv") == slurp(d3 / "report.csv"));
}

TEST_CASE("rotation: Kepler tail, MOND asymptote, rejection") {
  const fs::path dir = fresh_dir("rotation");
  CHECK(run("rotation --density uniform-ball:1,0.5 --r-max 500 --points 48 --out " +
            dir.string()) == 0);
  std::ifstream in(dir / "rotation.csv");
  std::string line;
  std::getline(in, line);  // seed header
  std::getline(in, line);
  CHECK(line == "r,v_newton,v_mond");
  double r = 0, vn = 0, vm = 0;
  while (std::getline(in, line)) {
    std::stringstream row(line);
    std::string tok;
    std::getline(row, tok, ',');
    r = std::stod(tok);
    std::getline(row, tok, ',');
    vn = std::stod(tok);
    std::getline(row, tok, ',');
    vm = std::stod(tok);
    if (r > 0.5)  // Kepler outside the support, M = pi/6
      CHECK(vn == doctest::Approx(std::sqrt(M_PI / 6.0 / r)).epsilon(1e-9));
  }
  // last row is r = 500: v_mond^4 -> a0 M = pi/6
  CHECK(r == doctest::Approx(500.0));
  CHECK(vm * vm * vm * vm == doctest::Approx(M_PI / 6.0).epsilon(0.01));

  // off-center density is not spherical
  CHECK(run("rotation --density uniform-ball:1,0.5,0.3,0,0 --out " + dir.string()) == 2);

  // zero density: both curves identically zero
  const fs::path zdir = fresh_dir("rotation_zero");
  CHECK(run("rotation --density zero --out " + zdir.string()) == 0);
  std::ifstream zin(zdir / "rotation.csv");
  std::getline(zin, line);
  std::getline(zin, line);
  while (std::getline(zin, line)) {
    const std::size_t c1 = line.find(',');
    CHECK(line.substr(c1 + 1) == "0,0");
  }
}

TEST_CASE("counterexample: blowup and signed CSV emission") {
  const fs::path dir = fresh_dir("ctr");
  CHECK(run("counterexample --family dyadic --q 1.5 --n-list 4 --n-list 8 --n-list 16 "
            "--out " +
            dir.string()) == 0);
  const std::string blow = slurp(dir / "blowup.csv");
  CHECK(blow.find("slope=") != std::string::npos);
  CHECK(blow.find("n,q,norm") != std::string::npos);
  CHECK(blow.find("\n4,1.5,") != std::string::npos);
  CHECK(blow.find("\n16,1.5,") != std::string::npos);

  CHECK(run("counterexample --family signed --N 50 --out " + dir.string()) == 0);
  const std::string sig = slurp(dir / "signed.csv");
  CHECK(sig.find("N,S_N,harmonic_bound") != std::string::npos);
  std::stringstream ss(sig);
  std::string line;
  std::getline(ss, line);
  std::getline(ss, line);
  std::getline(ss, line);  // first data row: S_1 = 9 pi, bound = 4 pi
  std::stringstream row(line);
  std::string tok;
  std::getline(row, tok, ',');
  CHECK(tok == "1");
  std::getline(row, tok, ',');
  CHECK(std::stod(tok) == doctest::Approx(9.0 * M_PI));
  std::getline(row, tok, ',');
  CHECK(std::stod(tok) == doctest::Approx(4.0 * M_PI));

  CHECK(run("counterexample --family unknown --out " + dir.string()) == 2);
}

TEST_CASE("config file with flag override") {
  const fs::path dir = fresh_dir("config");
  std::ofstream cfg(dir / "run.cfg");
  cfg << "[solve]\n";
  cfg << "n=32\n";
  cfg << "density=\"uniform-ball:1,0.5\"\n";
  cfg.close();

  const fs::path d1 = dir / "from_file";
  CHECK(run("--config " + (dir / "run.cfg").string() + " solve --out " + d1.string()) == 0);
  CHECK(csv_value(slurp(d1 / "summary.csv"), "n") == "32");

  // flags override the file
  const fs::path d2 = dir / "override";
  CHECK(run("--config " + (dir / "run.cfg").string() + " solve --n 16 --out " +
            d2.string()) == 0);
  CHECK(csv_value(slurp(d2 / "summary.csv"), "n") == "16");
  CHECK(std::stod(csv_value(slurp(d2 / "summary.csv"), "total_mass")) ==
        doctest::Approx(M_PI / 6.0).epsilon(0.03));
}
