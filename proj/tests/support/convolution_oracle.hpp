#pragma once

#include <array>
#include <complex>
#include <vector>

#include "oscilloflow/operators.hpp"
#include "oscilloflow/oscillation.hpp"
#include "oscilloflow/spectral_field.hpp"

namespace oscf::test {

/// Brute-force Fourier convolution of the advection term:
///   out_c(k) = sum_{p+q=k} vel_a(p) * (i q_a) * w_c(q)
/// summed over exact integer mode pairs (no grid, no FFT). Only modes with
/// every |k_axis| <= n/3 are produced (the comparison set after dealiasing).
inline SpectralField advection_convolution_oracle(const SpectralField& vel,
                                                  const SpectralField& w) {
    const TorusGrid& g = w.grid();
    const int n = g.points_per_axis();
    const int d = g.dim();
    const double cutoff = static_cast<double>(n) / 3.0;

    struct Mode {
        std::array<int, 3> k;
        std::size_t idx;
    };
    auto active = [&](const SpectralField& f) {
        std::vector<Mode> modes;
        for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& k) {
            for (int c = 0; c < f.components(); ++c)
                if (f.at(c, idx) != std::complex<double>{0.0, 0.0}) {
                    modes.push_back({k, idx});
                    return;
                }
        });
        return modes;
    };

    const std::vector<Mode> vmodes = active(vel);
    const std::vector<Mode> wmodes = active(w);

    auto wrap_index = [&](const std::array<int, 3>& k) {
        auto wrap = [n](int v) { return static_cast<std::size_t>((v + n) % n); };
        if (d == 2) return wrap(k[0]) * static_cast<std::size_t>(n) + wrap(k[1]);
        return (wrap(k[0]) * static_cast<std::size_t>(n) + wrap(k[1])) *
                   static_cast<std::size_t>(n) +
               wrap(k[2]);
    };

    SpectralField out(g, w.components());
    for (const Mode& p : vmodes)
        for (const Mode& q : wmodes) {
            std::array<int, 3> k{p.k[0] + q.k[0], p.k[1] + q.k[1], p.k[2] + q.k[2]};
            bool keep = true;
            for (int a = 0; a < d; ++a)
                if (std::abs(k[a]) > cutoff) keep = false;
            if (!keep) continue;
            const std::size_t kidx = wrap_index(k);
            for (int c = 0; c < w.components(); ++c) {
                std::complex<double> sum{0.0, 0.0};
                for (int a = 0; a < d; ++a) {
                    const std::complex<double> iqa{0.0, static_cast<double>(q.k[a])};
                    sum += vel.at(a, p.idx) * iqa * w.at(c, q.idx);
                }
                out.at(c, kidx) += sum;
            }
        }
    return out;
}

/// Oracle for the SQG right-hand side: -b(Nt) * truncated convolution of
/// (riesz theta) . grad theta.
inline SpectralField rhs_sqg_oracle(const SpectralField& theta, double t,
                                    const OscillationProfile& p) {
    SpectralField conv = advection_convolution_oracle(riesz_velocity(theta), theta);
    conv *= -p.evaluate(t);
    return conv;
}

/// Oracle for the NS right-hand side: -b(Nt) * Leray(truncated convolution).
inline SpectralField rhs_ns_oracle(const SpectralField& u, double t,
                                   const OscillationProfile& p) {
    SpectralField conv = leray_project(advection_convolution_oracle(u, u));
    conv *= -p.evaluate(t);
    return conv;
}

} // namespace oscf::test
