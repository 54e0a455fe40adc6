// Compares the OpenMP spectral kernels against the serial direct-sum
// reference at small sizes, and times the spectral path alone at larger
// sizes where the direct sum is impractical.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "qumond/convolution.hpp"
#include "qumond/grid.hpp"
#include "qumond/newtonian.hpp"
#include "qumond/reference.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

qumond::ScalarGrid test_density(int n, double L) {
  return qumond::ScalarGrid::from_function(n, L, [](double x, double y, double z) {
    const double r2 = x * x + y * y + z * z;
    return std::exp(-r2 / (2.0 * 0.3 * 0.3));
  });
}

}  // namespace

int main() {
  const double L = 2.0;

  std::printf("%-28s %8s %12s %12s %10s\n", "kernel", "n", "serial ms", "omp ms", "rel gap");

  for (int n : {8, 12, 16}) {
    const qumond::ScalarGrid g = test_density(n, L);
    qumond::FreeSpaceConvolver conv(n, L);

    auto t0 = Clock::now();
    const qumond::ScalarGrid ref = qumond::reference::potential_direct(g);
    const double serial = ms_since(t0);

    conv.potential(g);  // warm the kernel cache before timing
    t0 = Clock::now();
    const qumond::ScalarGrid fast = qumond::newtonian::solve_potential(conv, g);
    const double par = ms_since(t0);

    qumond::ScalarGrid diff = fast;
    diff -= ref;
    std::printf("%-28s %8d %12.2f %12.2f %10.2e\n", "potential (direct vs fft)", n, serial, par,
                qumond::l2_norm(diff) / qumond::l2_norm(ref));
  }

  for (int n : {8, 12, 16}) {
    const qumond::ScalarGrid g = test_density(n, L);
    qumond::FreeSpaceConvolver conv(n, L);
    const double eps = 2.0 * conv.spacing();

    auto t0 = Clock::now();
    const qumond::ScalarGrid ref = qumond::reference::tij_eps_direct(g, 0, 1, eps);
    const double serial = ms_since(t0);

    conv.tij_eps(g, 0, 1, eps);
    t0 = Clock::now();
    const qumond::ScalarGrid fast = conv.tij_eps(g, 0, 1, eps);
    const double par = ms_since(t0);

    qumond::ScalarGrid diff = fast;
    diff -= ref;
    std::printf("%-28s %8d %12.2f %12.2f %10.2e\n", "t_ij eps=2h (direct vs fft)", n, serial,
                par, qumond::l2_norm(diff) / qumond::l2_norm(ref));
  }

  for (int n : {32, 64, 96}) {
    const qumond::ScalarGrid g = test_density(n, L);
    qumond::FreeSpaceConvolver conv(n, L);
    conv.potential(g);
    auto t0 = Clock::now();
    conv.potential(g);
    std::printf("%-28s %8d %12s %12.2f %10s\n", "potential (fft only)", n, "-", ms_since(t0),
                "-");
  }

  for (int n : {32, 64}) {
    const qumond::ScalarGrid g = test_density(n, L);

    auto t0 = Clock::now();
    const qumond::VectorGrid ref = qumond::reference::gradient_fd_serial(g);
    const double serial = ms_since(t0);

    t0 = Clock::now();
    const qumond::VectorGrid fast = qumond::gradient_fd(g);
    const double par = ms_since(t0);

    qumond::VectorGrid diff = fast;
    diff -= ref;
    std::printf("%-28s %8d %12.2f %12.2f %10.2e\n", "gradient_fd (serial vs omp)", n, serial,
                par, qumond::l2_norm(diff) / std::max(1e-300, qumond::l2_norm(ref)));
  }

  return 0;
}
