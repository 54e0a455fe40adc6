#pragma once

#include <utility>

#include "qumond/convolution.hpp"
#include "qumond/grid.hpp"
#include "qumond/singular.hpp"

namespace qumond::helmholtz {

/// v = irrotational + solenoidal, split by the singular-integral projector.
struct Decomposition {
  VectorGrid input;
  VectorGrid irrotational;
  VectorGrid solenoidal;       // input - irrotational, by construction
  double curl_residual = 0.0;  // ||curl_fd(irrotational)||_2 / ||v||_2
  double div_residual = 0.0;   // ||div_fd(solenoidal)||_2 / ||v||_2
};

/// H_i v = (1/4 pi) sum_j T_ij v_j + v_i / 3.
VectorGrid project_irrotational(FreeSpaceConvolver& conv, const VectorGrid& v,
                                const singular::EpsilonSchedule& sched);

Decomposition decompose(FreeSpaceConvolver& conv, const VectorGrid& v,
                        const singular::EpsilonSchedule& sched);

/// Returns (int v . Hw, int Hv . w); the projector is symmetric so the two
/// should agree up to discretization.
std::pair<double, double> inner_product_symmetry_check(FreeSpaceConvolver& conv,
                                                       const VectorGrid& v, const VectorGrid& w,
                                                       const singular::EpsilonSchedule& sched);

/// ||div(Hv) - div(v)||_2 / ||div(v)||_2 with central-difference divergence.
/// Falls back to the absolute residual scaled by ||v||_2 when div(v) ~ 0.
double divergence_preservation_check(FreeSpaceConvolver& conv, const VectorGrid& v,
                                     const singular::EpsilonSchedule& sched);

}  // namespace qumond::helmholtz
