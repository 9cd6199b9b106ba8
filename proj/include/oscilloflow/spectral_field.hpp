#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "oscilloflow/torus_grid.hpp"

namespace oscf {

/// Fourier coefficients of a real scalar (components == 1) or vector
/// (components == dim) field, under the convention
///     f(x) = sum_k fhat(k) exp(i k.x)
/// with no 1/(2pi)^d factors in the sum. Storage is component-major,
/// row-major over the full k lattice.
///
/// Invariants maintained by the operators in this library:
///   - fhat(-k) == conj(fhat(k)) per component (reality),
///   - Nyquist-plane coefficients are exactly zero.
class SpectralField {
public:
    SpectralField(TorusGrid grid, int components)
        : grid_(grid),
          components_(components),
          coeff_(static_cast<std::size_t>(components) * grid.size()) {
        if (components != 1 && components != grid.dim())
            throw ConfigError("SpectralField: components must be 1 or dim");
    }

    const TorusGrid& grid() const { return grid_; }
    int components() const { return components_; }
    std::size_t modes() const { return grid_.size(); }

    std::complex<double>& at(int c, std::size_t idx) {
        return coeff_[static_cast<std::size_t>(c) * modes() + idx];
    }
    const std::complex<double>& at(int c, std::size_t idx) const {
        return coeff_[static_cast<std::size_t>(c) * modes() + idx];
    }

    std::span<std::complex<double>> component(int c) {
        return {coeff_.data() + static_cast<std::size_t>(c) * modes(), modes()};
    }
    std::span<const std::complex<double>> component(int c) const {
        return {coeff_.data() + static_cast<std::size_t>(c) * modes(), modes()};
    }

    std::span<std::complex<double>> raw() { return coeff_; }
    std::span<const std::complex<double>> raw() const { return coeff_; }

    /// Mean value of component c (the k = 0 coefficient).
    std::complex<double> mean(int c = 0) const { return at(c, 0); }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : coeff_) m = std::max(m, std::abs(z));
        return m;
    }

    bool all_finite() const {
        for (const auto& z : coeff_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    SpectralField& operator*=(double s) {
        for (auto& z : coeff_) z *= s;
        return *this;
    }
    SpectralField& operator+=(const SpectralField& o) {
        for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
        return *this;
    }
    SpectralField& operator-=(const SpectralField& o) {
        for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
        return *this;
    }

    bool bitwise_equal(const SpectralField& o) const {
        if (grid_ != o.grid_ || components_ != o.components_) return false;
        for (std::size_t i = 0; i < coeff_.size(); ++i)
            if (coeff_[i] != o.coeff_[i]) return false;
        return true;
    }

private:
    TorusGrid grid_;
    int components_;
    std::vector<std::complex<double>> coeff_;
};

/// Max over k of |k . uhat(k)| (spectral divergence, max-modulus sense).
double max_spectral_divergence(const SpectralField& u);

/// True when max|k.uhat| <= 1e-12 * max|uhat| (the divergence-free invariant).
bool is_divergence_free(const SpectralField& u);

/// True when the k=0 coefficient of every component is negligible
/// (|fhat(0)| <= 1e-12 * max|fhat|).
bool is_mean_zero(const SpectralField& f);

/// Enforce fhat(-k) = conj(fhat(k)) exactly by averaging conjugate pairs,
/// and zero the Nyquist planes.
void symmetrize_reality(SpectralField& f);

/// Zero every coefficient with an axis index on the Nyquist plane.
void zero_nyquist(SpectralField& f);

} // namespace oscf
