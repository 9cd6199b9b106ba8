#include "oscilloflow/norms.hpp"

#include <cmath>

#include "oscilloflow/fourier.hpp"
#include "oscilloflow/operators.hpp"

namespace oscf {

std::string to_string(EquationKind k) { return k == EquationKind::NS ? "NS" : "SQG"; }

double sobolev_norm(const SpectralField& f, double s) {
    if (s < 0.0)
        throw DomainError("sobolev_norm: s must be >= 0 (apply fractional_laplacian first)");
    double sum = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto span = f.component(c);
        if (s == 0.0) {
            for (const auto& z : span) sum += std::norm(z);
        } else {
            for_each_mode(f.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
                const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
                if (k2 == 0.0) return;
                sum += std::pow(k2, s) * std::norm(span[idx]);
            });
        }
    }
    return std::sqrt(f.grid().volume() * sum);
}

double h2_full_norm(const SpectralField& f) {
    const double l2 = sobolev_norm(f, 0.0);
    const double h2 = sobolev_norm(f, 2.0);
    return std::sqrt(l2 * l2 + h2 * h2);
}

double sup_norm(const SpectralField& f) {
    const std::size_t m = f.grid().size();
    std::vector<double> mag_sq(m, 0.0);
    std::vector<double> buf(m);
    for (int c = 0; c < f.components(); ++c) {
        inverse_transform_component(f, c, buf.data());
        for (std::size_t i = 0; i < m; ++i) mag_sq[i] += buf[i] * buf[i];
    }
    double mx = 0.0;
    for (double v : mag_sq) mx = std::max(mx, v);
    return std::sqrt(mx);
}

double grad_sup_norm(const SpectralField& f) {
    const std::size_t m = f.grid().size();
    std::vector<double> mag_sq(m, 0.0);
    std::vector<double> buf(m);
    for (int c = 0; c < f.components(); ++c)
        for (int a = 0; a < f.grid().dim(); ++a) {
            SpectralField df = derivative(f, a);
            inverse_transform_component(df, c, buf.data());
            for (std::size_t i = 0; i < m; ++i) mag_sq[i] += buf[i] * buf[i];
        }
    double mx = 0.0;
    for (double v : mag_sq) mx = std::max(mx, v);
    return std::sqrt(mx);
}

void NormTrace::append(double time, const NormSample& s,
                       std::optional<double> running_dissipation) {
    if (times_.empty()) {
        if (time != start_time_)
            throw DomainError("NormTrace: first sample must be at the trace start time");
    } else if (time <= times_.back()) {
        throw DomainError("NormTrace: times must be strictly increasing");
    }
    for (double v : {s.l2, s.h_diss, s.h1, s.h2, s.h_top, s.grad_linf})
        if (!std::isfinite(v) || v < 0.0)
            throw DomainError("NormTrace: norm samples must be finite and >= 0");
    const bool want_diss = times_.empty() ? running_dissipation.has_value()
                                          : !running_dissipation_.empty();
    if (want_diss != running_dissipation.has_value())
        throw DomainError("NormTrace: running dissipation must be supplied for every sample "
                          "or for none");

    const double h2sq = s.h2 * s.h2;
    const double prev_sup = running_sup_h2_sq_.empty() ? 0.0 : running_sup_h2_sq_.back();
    const double prev_top = top_sq_integral_.empty() ? 0.0 : top_sq_integral_.back();
    const double prev_diss = diss_sq_trapz_.empty() ? 0.0 : diss_sq_trapz_.back();

    if (!times_.empty()) {
        const double dt = time - times_.back();
        const NormSample& p = samples_.back();
        top_sq_integral_.push_back(prev_top +
                                   0.5 * dt * (p.h_top * p.h_top + s.h_top * s.h_top));
        diss_sq_trapz_.push_back(prev_diss +
                                 0.5 * dt * (p.h_diss * p.h_diss + s.h_diss * s.h_diss));
    } else {
        top_sq_integral_.push_back(0.0);
        diss_sq_trapz_.push_back(0.0);
    }
    running_sup_h2_sq_.push_back(std::max(prev_sup, h2sq));
    if (running_dissipation.has_value()) running_dissipation_.push_back(*running_dissipation);
    times_.push_back(time);
    samples_.push_back(s);
}

double NormTrace::xt_prefix(std::size_t i) const {
    return running_sup_h2_sq_[i] + top_sq_integral_[i];
}

double NormTrace::energy_residual_prefix(std::size_t i) const {
    const double e0 = samples_.front().l2 * samples_.front().l2;
    if (e0 == 0.0 || i == 0) return 0.0;
    const double et = samples_[i].l2 * samples_[i].l2;
    const double diss = has_running_dissipation()
                            ? running_dissipation_[i] - running_dissipation_[0]
                            : diss_sq_trapz_[i];
    return std::abs(et - e0 + 2.0 * diss) / e0;
}

double xt_functional(const NormTrace& trace) {
    if (trace.empty()) throw DomainError("xt_functional: empty trace");
    return trace.xt_prefix(trace.size() - 1);
}

double energy_balance_report(const NormTrace& trace) {
    if (trace.size() < 2) throw DomainError("energy_balance_report: need at least 2 samples");
    const double e0 = trace.samples().front().l2;
    if (e0 == 0.0) throw DomainError("energy_balance_report: initial energy is zero");
    return trace.energy_residual_prefix(trace.size() - 1);
}

BootstrapVerdict bootstrap_monitor(const NormTrace& trace, double c_bootstrap,
                                   double h2_initial) {
    if (!(h2_initial > 0.0)) throw DomainError("bootstrap_monitor: h2_initial must be > 0");
    if (!(c_bootstrap > 0.0)) throw DomainError("bootstrap_monitor: c_bootstrap must be > 0");
    const double bound = 2.0 * c_bootstrap * h2_initial * h2_initial;
    for (std::size_t i = 0; i < trace.size(); ++i)
        if (trace.xt_prefix(i) > bound) return {false, trace.times()[i]};
    return {true, 0.0};
}

} // namespace oscf
