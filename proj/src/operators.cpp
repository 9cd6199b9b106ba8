#include "oscilloflow/operators.hpp"

#include <cmath>
#include <vector>

#include "oscilloflow/fourier.hpp"

namespace oscf {

SpectralField derivative(const SpectralField& f, int axis) {
    if (axis < 0 || axis >= f.grid().dim())
        throw ConfigError("derivative: axis " + std::to_string(axis) + " out of range for dim " +
                          std::to_string(f.grid().dim()));
    SpectralField out(f.grid(), f.components());
    for (int c = 0; c < f.components(); ++c) {
        auto src = f.component(c);
        auto dst = out.component(c);
        for_each_mode(f.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
            const double ka = static_cast<double>(k[axis]);
            const std::complex<double> z = src[idx];
            dst[idx] = {-ka * z.imag(), ka * z.real()}; // i * k_a * z
        });
    }
    return out;
}

SpectralField fractional_laplacian(const SpectralField& f, double beta) {
    if (beta < 0.0 && !is_mean_zero(f))
        throw DomainError("fractional_laplacian: beta < 0 requires a mean-zero field");
    SpectralField out(f.grid(), f.components());
    if (beta == 0.0) {
        out = f;
        return out;
    }
    for (int c = 0; c < f.components(); ++c) {
        auto src = f.component(c);
        auto dst = out.component(c);
        for_each_mode(f.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
            const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
            dst[idx] = (k2 == 0.0) ? std::complex<double>{0.0, 0.0}
                                   : src[idx] * std::pow(k2, beta);
        });
    }
    return out;
}

SpectralField riesz_velocity(const SpectralField& theta) {
    if (theta.grid().dim() != 2 || theta.components() != 1)
        throw ConfigError("riesz_velocity: requires a 2D scalar field");
    if (!is_mean_zero(theta))
        throw DomainError("riesz_velocity: theta must be mean-zero");
    SpectralField u(theta.grid(), 2);
    auto src = theta.component(0);
    auto u1 = u.component(0);
    auto u2 = u.component(1);
    for_each_mode(theta.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
        const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1]);
        if (k2 == 0.0) return;
        const double inv = 1.0 / std::sqrt(k2);
        const std::complex<double> z = src[idx];
        // (-i k2, i k1)/|k| * z
        u1[idx] = {k[1] * inv * z.imag(), -k[1] * inv * z.real()};
        u2[idx] = {-k[0] * inv * z.imag(), k[0] * inv * z.real()};
    });
    return u;
}

SpectralField leray_project(const SpectralField& u) {
    const int d = u.grid().dim();
    if (u.components() != d)
        throw ConfigError("leray_project: requires a vector field (components == dim)");
    SpectralField out = u;
    for_each_mode(u.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
        const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        if (k2 == 0.0) return; // mean flow passes through
        std::complex<double> dot{0.0, 0.0};
        for (int c = 0; c < d; ++c) dot += static_cast<double>(k[c]) * out.at(c, idx);
        dot /= k2;
        for (int c = 0; c < d; ++c) out.at(c, idx) -= static_cast<double>(k[c]) * dot;
    });
    return out;
}

void dealias_in_place(SpectralField& f) {
    const double cutoff = static_cast<double>(f.grid().points_per_axis()) / 3.0;
    const int d = f.grid().dim();
    for (int c = 0; c < f.components(); ++c) {
        auto span = f.component(c);
        for_each_mode(f.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
            for (int a = 0; a < d; ++a)
                if (std::abs(static_cast<double>(k[a])) > cutoff) {
                    span[idx] = {0.0, 0.0};
                    return;
                }
        });
    }
}

SpectralField dealias(const SpectralField& f) {
    SpectralField out = f;
    dealias_in_place(out);
    return out;
}

SpectralField advect(const SpectralField& velocity, const SpectralField& field) {
    const TorusGrid& g = field.grid();
    if (velocity.grid() != g) throw ConfigError("advect: grids do not match");
    if (velocity.components() != g.dim())
        throw ConfigError("advect: velocity must have dim components");
    const std::size_t m = g.size();
    const int d = g.dim();

    std::vector<std::vector<double>> vel(static_cast<std::size_t>(d), std::vector<double>(m));
    for (int a = 0; a < d; ++a)
        inverse_transform_component(velocity, a, vel[static_cast<std::size_t>(a)].data());

    SpectralField out(g, field.components());
    std::vector<double> dbuf(m);
    std::vector<double> acc(m);
    for (int c = 0; c < field.components(); ++c) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (int a = 0; a < d; ++a) {
            SpectralField df = derivative(field, a);
            inverse_transform_component(df, c, dbuf.data());
            const double* va = vel[static_cast<std::size_t>(a)].data();
            for (std::size_t i = 0; i < m; ++i) acc[i] += va[i] * dbuf[i];
        }
        forward_transform_raw(g, acc.data(), out.component(c).data());
        out.at(c, 0) = {0.0, 0.0};
    }
    zero_nyquist(out);
    return out;
}

SpectralField mollify(const SpectralField& f, double epsilon) {
    const MollifierKernel kernel(epsilon); // validates epsilon > 0
    SpectralField out(f.grid(), f.components());
    for (int c = 0; c < f.components(); ++c) {
        auto src = f.component(c);
        auto dst = out.component(c);
        for_each_mode(f.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
            const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
            dst[idx] = src[idx] * kernel.symbol(std::sqrt(k2));
        });
    }
    return out;
}

} // namespace oscf
