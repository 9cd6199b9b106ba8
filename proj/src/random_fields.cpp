#include "oscilloflow/random_fields.hpp"

#include <cmath>
#include <random>

namespace oscf {

namespace {

std::size_t flat_index(const TorusGrid& g, int k0, int k1, int k2) {
    const int n = g.points_per_axis();
    auto wrap = [n](int k) { return static_cast<std::size_t>((k + n) % n); };
    if (g.dim() == 2) return wrap(k0) * static_cast<std::size_t>(n) + wrap(k1);
    return (wrap(k0) * static_cast<std::size_t>(n) + wrap(k1)) * static_cast<std::size_t>(n) +
           wrap(k2);
}

// Representative of the +/-k pair: first nonzero entry positive.
bool is_canonical(int k0, int k1, int k2) {
    if (k0 != 0) return k0 > 0;
    if (k1 != 0) return k1 > 0;
    return k2 > 0;
}

} // namespace

SpectralField random_band_limited(const TorusGrid& grid, int components, double k_max,
                                  std::uint64_t seed) {
    if (!(k_max >= 1.0)) throw ConfigError("random_band_limited: k_max must be >= 1");
    if (k_max >= grid.points_per_axis() / 2)
        throw ConfigError("random_band_limited: band exceeds the grid's wavenumber range");

    SpectralField f(grid, components);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int kk = static_cast<int>(std::floor(k_max));
    const int k2lo = grid.dim() == 3 ? -kk : 0;
    const int k2hi = grid.dim() == 3 ? kk : 0;
    const double band_sq = k_max * k_max;

    for (int k0 = -kk; k0 <= kk; ++k0)
        for (int k1 = -kk; k1 <= kk; ++k1)
            for (int k2 = k2lo; k2 <= k2hi; ++k2) {
                const double ksq = static_cast<double>(k0 * k0 + k1 * k1 + k2 * k2);
                if (ksq == 0.0 || ksq > band_sq) continue;
                if (!is_canonical(k0, k1, k2)) continue;
                const double amp = 1.0 / (1.0 + ksq);
                const std::size_t idx = flat_index(grid, k0, k1, k2);
                const std::size_t jdx = flat_index(grid, -k0, -k1, -k2);
                for (int c = 0; c < components; ++c) {
                    const std::complex<double> z{amp * gauss(rng), amp * gauss(rng)};
                    f.at(c, idx) = z;
                    f.at(c, jdx) = std::conj(z);
                }
            }
    return f;
}

} // namespace oscf
