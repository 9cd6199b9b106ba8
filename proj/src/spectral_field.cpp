#include "oscilloflow/spectral_field.hpp"

#include <cmath>

namespace oscf {

double max_spectral_divergence(const SpectralField& u) {
    const int d = u.grid().dim();
    double m = 0.0;
    for_each_mode(u.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
        std::complex<double> dot{0.0, 0.0};
        for (int c = 0; c < d; ++c) dot += static_cast<double>(k[c]) * u.at(c, idx);
        m = std::max(m, std::abs(dot));
    });
    return m;
}

bool is_divergence_free(const SpectralField& u) {
    if (u.components() != u.grid().dim()) return false;
    const double scale = u.max_abs();
    if (scale == 0.0) return true;
    return max_spectral_divergence(u) <= 1e-12 * scale;
}

bool is_mean_zero(const SpectralField& f) {
    const double scale = f.max_abs();
    if (scale == 0.0) return true;
    for (int c = 0; c < f.components(); ++c)
        if (std::abs(f.at(c, 0)) > 1e-12 * scale) return false;
    return true;
}

namespace {

// idx of -k: each axis index i maps to (n - i) mod n.
std::size_t conjugate_index(const TorusGrid& g, std::size_t idx) {
    const int n = g.points_per_axis();
    const auto un = static_cast<std::size_t>(n);
    if (g.dim() == 2) {
        const std::size_t i0 = idx / un, i1 = idx % un;
        const std::size_t j0 = (un - i0) % un, j1 = (un - i1) % un;
        return j0 * un + j1;
    }
    const std::size_t i0 = idx / (un * un), i1 = (idx / un) % un, i2 = idx % un;
    const std::size_t j0 = (un - i0) % un, j1 = (un - i1) % un, j2 = (un - i2) % un;
    return (j0 * un + j1) * un + j2;
}

} // namespace

void zero_nyquist(SpectralField& f) {
    const int n = f.grid().points_per_axis();
    for (int c = 0; c < f.components(); ++c) {
        auto span = f.component(c);
        for_each_mode(f.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
            for (int a = 0; a < f.grid().dim(); ++a)
                if (k[a] == -n / 2) {
                    span[idx] = {0.0, 0.0};
                    return;
                }
        });
    }
}

void symmetrize_reality(SpectralField& f) {
    zero_nyquist(f);
    const std::size_t m = f.modes();
    for (int c = 0; c < f.components(); ++c) {
        auto span = f.component(c);
        for (std::size_t idx = 0; idx < m; ++idx) {
            const std::size_t jdx = conjugate_index(f.grid(), idx);
            if (jdx < idx) continue;
            if (jdx == idx) {
                span[idx] = {span[idx].real(), 0.0};
            } else {
                const std::complex<double> avg = 0.5 * (span[idx] + std::conj(span[jdx]));
                span[idx] = avg;
                span[jdx] = std::conj(avg);
            }
        }
    }
}

} // namespace oscf
