#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oscilloflow/errors.hpp"

namespace oscf {

enum class OscillationKind { sine, square_wave, constant_one, zero, tabulated };

std::string to_string(OscillationKind k);
OscillationKind oscillation_kind_from_string(const std::string& s);

/// The oscillating coefficient b(N t). The base function b is selected by
/// `kind`; constant_one is the classical-equation control (it violates the
/// bounded-antiderivative admissibility condition on unbounded horizons).
struct OscillationProfile {
    OscillationKind kind = OscillationKind::sine;
    double n_multiplier = 1.0; // N >= 0
    std::vector<std::pair<double, double>> table; // (t, b(t)), tabulated kind only

    /// Base function b(tau).
    double base(double tau) const;

    /// b(N * t) for t >= 0.
    double evaluate(double t) const;
};

OscillationProfile make_profile(OscillationKind kind, double n_multiplier);

/// Estimate of M = sup|b| + sup_{t1<t2} |int_{t1}^{t2} b|, on the base
/// function over [0, horizon] with `samples` quadrature nodes (composite
/// trapezoid; the pair supremum reduces to max - min of the antiderivative).
double oscillation_bound_estimate(const OscillationProfile& p, double horizon, int samples);

/// N_0 = 500 M^3 C^8 (h2 + 1)^4, the NS oscillation-frequency threshold.
double n_zero_ns(double h2_norm, double m_bound, double c_const);

} // namespace oscf
