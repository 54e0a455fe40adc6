#pragma once

#include <cstdint>

#include "qumond/grid.hpp"

namespace qumond::fields {

/// Smooth radial cutoff: 1 for |x| <= r0, 0 for |x| >= r1, C^inf bump
/// transition in between. Keeps synthesized fields compactly supported so
/// the free-space operators see a decaying input.
ScalarGrid bump_window(int n, double half_width, double r0, double r1);

/// Seeded white noise, spectrally filtered (Gaussian decay at scale
/// k_cut = band_fraction * Nyquist, hard zero above), then windowed to
/// compact support and normalized to unit L^2. Deterministic for a seed.
ScalarGrid band_limited_scalar(int n, double half_width, std::uint64_t seed,
                               double band_fraction = 1.0 / 3.0);

VectorGrid band_limited_vector(int n, double half_width, std::uint64_t seed,
                               double band_fraction = 1.0 / 3.0);

/// curl of a band-limited vector potential: discretely divergence-free in
/// the interior (central-difference operators commute) and compact.
VectorGrid band_limited_solenoidal(int n, double half_width, std::uint64_t seed,
                                   double band_fraction = 1.0 / 3.0);

/// Smooth compact bump test function exp(-1/(1-|x-c|^2/w^2)) on |x-c| < w.
ScalarGrid bump_test_function(int n, double half_width, const Vec3& center, double width);

}  // namespace qumond::fields
