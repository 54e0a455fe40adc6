#include "qumond/helmholtz.hpp"

#include <cmath>
#include <numbers>

namespace qumond::helmholtz {

VectorGrid project_irrotational(FreeSpaceConvolver& conv, const VectorGrid& v,
                                const singular::EpsilonSchedule& sched) {
  const double inv4pi = 1.0 / (4.0 * std::numbers::pi);
  VectorGrid out(v.n(), v.half_width());
  for (int i = 0; i < 3; ++i) {
    ScalarGrid acc(v.n(), v.half_width());
    for (int j = 0; j < 3; ++j) acc += singular::t_ij(conv, v.comp(j), i, j, sched);
    acc *= inv4pi;
    acc += (1.0 / 3.0) * v.comp(i);
    out.comp(i) = std::move(acc);
  }
  return out;
}

Decomposition decompose(FreeSpaceConvolver& conv, const VectorGrid& v,
                        const singular::EpsilonSchedule& sched) {
  Decomposition d{v, project_irrotational(conv, v, sched), v};
  d.solenoidal -= d.irrotational;
  const double vnorm = l2_norm(v);
  if (vnorm > 0.0) {
    d.curl_residual = l2_norm(curl_fd(d.irrotational)) / vnorm;
    d.div_residual = l2_norm(divergence_fd(d.solenoidal)) / vnorm;
  }
  return d;
}

std::pair<double, double> inner_product_symmetry_check(FreeSpaceConvolver& conv,
                                                       const VectorGrid& v, const VectorGrid& w,
                                                       const singular::EpsilonSchedule& sched) {
  if (!v.compatible(w))
    throw std::invalid_argument("inner_product_symmetry_check: incompatible grids");
  VectorGrid hw = project_irrotational(conv, w, sched);
  VectorGrid hv = project_irrotational(conv, v, sched);
  return {inner_product(v, hw), inner_product(hv, w)};
}

double divergence_preservation_check(FreeSpaceConvolver& conv, const VectorGrid& v,
                                     const singular::EpsilonSchedule& sched) {
  VectorGrid hv = project_irrotational(conv, v, sched);
  ScalarGrid div_v = divergence_fd(v);
  ScalarGrid div_hv = divergence_fd(hv);
  const double denom = l2_norm(div_v);
  const double resid = l2_norm(div_hv - div_v);
  const double vnorm = l2_norm(v);
  if (denom > 1e-12 * vnorm) return resid / denom;
  return vnorm > 0.0 ? resid / vnorm : 0.0;
}

}  // namespace qumond::helmholtz
