#pragma once

#include <cmath>

#include "oscilloflow/spectral_field.hpp"

namespace oscf {

/// Smooth radial mollifier in symbol form. The kernel is the Gaussian,
/// rhohat(xi) = exp(-|xi|^2/2): mass one, |rhohat| <= 1, and decay faster
/// than any polynomial.
struct MollifierKernel {
    double epsilon;

    explicit MollifierKernel(double eps) : epsilon(eps) {
        if (!(eps > 0.0)) throw DomainError("MollifierKernel: epsilon must be positive");
    }

    /// rhohat(epsilon * k) for |k| = k_norm.
    double symbol(double k_norm) const {
        const double x = epsilon * k_norm;
        return std::exp(-0.5 * x * x);
    }
};

/// Spectral partial derivative d/dx_axis: multiplication by i*k_axis.
SpectralField derivative(const SpectralField& f, int axis);

/// (-Laplacian)^beta: multiplication by |k|^(2*beta). The k=0 mode maps to 0
/// for beta > 0; beta < 0 requires a mean-zero field.
SpectralField fractional_laplacian(const SpectralField& f, double beta);

/// SQG velocity u = grad^perp (-Laplacian)^{-1/2} theta, grad^perp = (-d2, d1).
/// Per mode: uhat = (-i k2, i k1)/|k| thetahat. Requires dim 2, mean-zero theta.
SpectralField riesz_velocity(const SpectralField& theta);

/// Leray projection onto divergence-free fields: per mode I - k k^T/|k|^2,
/// k = 0 passes through unchanged.
SpectralField leray_project(const SpectralField& u);

/// 2/3-rule dealiasing: zero every coefficient with any |k_axis| > n/3.
SpectralField dealias(const SpectralField& f);
void dealias_in_place(SpectralField& f);

/// Mollification f * rho_eps, realized as multiplication by rhohat(eps*k).
SpectralField mollify(const SpectralField& f, double epsilon);

/// Pseudo-spectral advection product (velocity . grad field): inverse
/// transform velocity and gradient, multiply on the grid, transform back.
/// The k = 0 mode is zeroed (advection carries no mean). Retained modes are
/// alias-free when the inputs are band-limited to the 2/3 ball; callers
/// dealias the result.
SpectralField advect(const SpectralField& velocity, const SpectralField& field);

} // namespace oscf
