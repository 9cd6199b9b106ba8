#pragma once

#include <complex>
#include <span>
#include <vector>

#include "oscilloflow/spectral_field.hpp"

namespace oscf {

/// Forward DFT of real grid samples (component-major, row-major lattice,
/// grid.size() values per component). Output coefficients follow the
/// f(x) = sum_k fhat(k) e^{ikx} convention; the Nyquist planes are zeroed
/// and reality is enforced exactly.
SpectralField forward_transform(const TorusGrid& grid, std::span<const double> samples,
                                int components);

/// Inverse DFT to real grid samples, component-major layout.
std::vector<double> inverse_transform(const SpectralField& f);

/// Inverse DFT of a single component into a caller-provided buffer of
/// grid.size() doubles.
void inverse_transform_component(const SpectralField& f, int c, double* out);

/// Forward DFT of one real component in place of constructing a field:
/// writes coefficients (with 1/n^d scaling) into `out`, which must hold
/// grid.size() complex values. No Nyquist/reality cleanup is applied.
void forward_transform_raw(const TorusGrid& grid, const double* samples,
                           std::complex<double>* out);

} // namespace oscf
