#pragma once

#include <cstdint>

#include "oscilloflow/spectral_field.hpp"

namespace oscf {

/// Seeded mean-zero Hermitian field with random coefficients on 0 < |k| <= k_max
/// (Euclidean), amplitude ~ N(0,1)/(1+|k|^2) per component. Modes are visited
/// in a fixed lattice order, so the same seed yields the same *function* on
/// any grid large enough to hold the band.
SpectralField random_band_limited(const TorusGrid& grid, int components, double k_max,
                                  std::uint64_t seed);

} // namespace oscf
