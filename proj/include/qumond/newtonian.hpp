#pragma once

#include <array>

#include "qumond/convolution.hpp"
#include "qumond/grid.hpp"
#include "qumond/singular.hpp"

namespace qumond::newtonian {

/// Potential, field and source bundled (G = 1 throughout).
struct NewtonianSolution {
  ScalarGrid potential;
  VectorGrid field;
  ScalarGrid source;
};

/// Free-space convolution of g with -1/|x|.
ScalarGrid solve_potential(FreeSpaceConvolver& conv, const ScalarGrid& g);

/// Convolution with x/|x|^3 componentwise.
VectorGrid solve_field(FreeSpaceConvolver& conv, const ScalarGrid& g);

NewtonianSolution solve(FreeSpaceConvolver& conv, const ScalarGrid& g);

/// Symmetric 3x3 matrix of grids stored as the upper triangle.
class Hessian {
public:
  explicit Hessian(std::array<ScalarGrid, 6> comps) : comps_(std::move(comps)) {}
  const ScalarGrid& operator()(int i, int j) const {
    static constexpr int map[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return comps_[map[i][j]];
  }

private:
  std::array<ScalarGrid, 6> comps_;  // 00, 01, 02, 11, 12, 22
};

/// Second derivatives of the potential: T_ij g plus the diagonal local term
/// (4*pi/3) g; the trace equals 4*pi*g.
Hessian hessian(FreeSpaceConvolver& conv, const ScalarGrid& g,
                const singular::EpsilonSchedule& sched);

ScalarGrid hessian_trace(const Hessian& hess);

/// (1/2) int U_rho sigma dx.
double interaction_energy(FreeSpaceConvolver& conv, const ScalarGrid& rho,
                          const ScalarGrid& sigma);

struct EnergyIdentity {
  double via_potential;  // (1/2) int U_rho sigma
  double via_fields;     // -(1/8 pi) int grad U_rho . grad U_sigma
                         // (box integral plus the boundary flux term)
  double rel_gap;
};

/// Both sides of the energy identity plus their relative gap.
EnergyIdentity interaction_energy_check(FreeSpaceConvolver& conv, const ScalarGrid& rho,
                                        const ScalarGrid& sigma);

}  // namespace qumond::newtonian
