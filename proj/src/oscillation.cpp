#include "oscilloflow/oscillation.hpp"

#include <algorithm>
#include <cmath>

namespace oscf {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::string to_string(OscillationKind k) {
    switch (k) {
        case OscillationKind::sine: return "sine";
        case OscillationKind::square_wave: return "square_wave";
        case OscillationKind::constant_one: return "constant_one";
        case OscillationKind::zero: return "zero";
        case OscillationKind::tabulated: return "tabulated";
    }
    return "?";
}

OscillationKind oscillation_kind_from_string(const std::string& s) {
    if (s == "sine") return OscillationKind::sine;
    if (s == "square_wave") return OscillationKind::square_wave;
    if (s == "constant_one") return OscillationKind::constant_one;
    if (s == "zero") return OscillationKind::zero;
    if (s == "tabulated") return OscillationKind::tabulated;
    throw ConfigError("unknown oscillation kind '" + s + "'");
}

double OscillationProfile::base(double tau) const {
    switch (kind) {
        case OscillationKind::sine:
            return std::sin(tau);
        case OscillationKind::square_wave: {
            const double phase = tau - kTwoPi * std::floor(tau / kTwoPi);
            return phase < 0.5 * kTwoPi ? 1.0 : -1.0;
        }
        case OscillationKind::constant_one:
            return 1.0;
        case OscillationKind::zero:
            return 0.0;
        case OscillationKind::tabulated: {
            if (table.empty()) throw ConfigError("tabulated profile has no table");
            if (tau < table.front().first || tau > table.back().first)
                throw DomainError("tabulated profile evaluated at t = " + std::to_string(tau) +
                                  " outside table range");
            auto it = std::lower_bound(table.begin(), table.end(), tau,
                                       [](const auto& e, double v) { return e.first < v; });
            if (it == table.begin()) return it->second;
            if (it == table.end()) return table.back().second;
            const auto& [t1, v1] = *it;
            const auto& [t0, v0] = *(it - 1);
            if (t1 == t0) return v1;
            const double w = (tau - t0) / (t1 - t0);
            return v0 + w * (v1 - v0);
        }
    }
    return 0.0;
}

double OscillationProfile::evaluate(double t) const {
    if (t < 0.0) throw DomainError("OscillationProfile: t must be >= 0");
    return base(n_multiplier * t);
}

OscillationProfile make_profile(OscillationKind kind, double n_multiplier) {
    if (n_multiplier < 0.0) throw ConfigError("oscillation multiplier N must be >= 0");
    OscillationProfile p;
    p.kind = kind;
    p.n_multiplier = n_multiplier;
    return p;
}

double oscillation_bound_estimate(const OscillationProfile& p, double horizon, int samples) {
    if (!(horizon > 0.0)) throw ConfigError("oscillation_bound_estimate: horizon must be > 0");
    if (samples < 100) throw ConfigError("oscillation_bound_estimate: samples must be >= 100");

    // Cumulative trapezoid, carried as horizon * (weighted sum / (samples-1))
    // so that a constant profile integrates exactly.
    const int m = samples;
    double sup_b = 0.0;
    double wsum = 0.0;
    double cum_max = 0.0, cum_min = 0.0;
    double prev = p.base(0.0);
    sup_b = std::abs(prev);
    for (int i = 1; i < m; ++i) {
        const double t = horizon * (static_cast<double>(i) / static_cast<double>(m - 1));
        const double bi = p.base(t);
        sup_b = std::max(sup_b, std::abs(bi));
        wsum += 0.5 * (prev + bi);
        const double cum = horizon * (wsum / static_cast<double>(m - 1));
        cum_max = std::max(cum_max, cum);
        cum_min = std::min(cum_min, cum);
        prev = bi;
    }
    return sup_b + (cum_max - cum_min);
}

double n_zero_ns(double h2_norm, double m_bound, double c_const) {
    if (!(h2_norm >= 0.0) || !std::isfinite(h2_norm))
        throw DomainError("n_zero_ns: h2_norm must be finite and >= 0");
    if (!(m_bound > 0.0) || !std::isfinite(m_bound))
        throw DomainError("n_zero_ns: m_bound must be finite and > 0");
    if (!(c_const >= 1.0) || !std::isfinite(c_const))
        throw DomainError("n_zero_ns: c_const must be finite and >= 1");
    const double m3 = m_bound * m_bound * m_bound;
    const double c2 = c_const * c_const;
    const double c8 = (c2 * c2) * (c2 * c2);
    const double h1 = h2_norm + 1.0;
    const double h12 = h1 * h1;
    return 500.0 * m3 * c8 * (h12 * h12);
}

} // namespace oscf
