#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oscilloflow/spectral_field.hpp"

namespace oscf {

enum class EquationKind { NS, SQG };

std::string to_string(EquationKind k);

/// Homogeneous Sobolev norm ((2pi)^d sum_k |k|^{2s} |fhat(k)|^2)^{1/2},
/// summed over components. s must be >= 0; k = 0 contributes only at s = 0.
double sobolev_norm(const SpectralField& f, double s);

/// Full H^2 norm, (||f||_{L^2}^2 + ||f||_{Hdot^2}^2)^{1/2}.
double h2_full_norm(const SpectralField& f);

/// Grid maximum of the pointwise Euclidean magnitude across components.
double sup_norm(const SpectralField& f);

/// Grid maximum of the pointwise Frobenius norm of the gradient
/// (all components, all axes).
double grad_sup_norm(const SpectralField& f);

/// One diagnostic sample. h_diss is the dissipation-order norm
/// (Hdot^1 for NS, Hdot^{alpha/2} for SQG); h_top is Hdot^3 for NS and
/// Hdot^{2+alpha/2} for SQG.
struct NormSample {
    double l2 = 0.0;
    double h_diss = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double h_top = 0.0;
    double grad_linf = 0.0;
};

/// Time series of Sobolev norms along a run, plus the running sup of the
/// Hdot^2 norm squared and (for simulation-produced traces) the dissipation
/// integral accumulated by the integrator at every step.
class NormTrace {
public:
    /// start_time is 0 for ordinary runs; a resumed run continues its trace
    /// from the checkpoint time.
    NormTrace(EquationKind equation, double alpha, double start_time = 0.0)
        : equation_(equation), alpha_(alpha), start_time_(start_time) {}

    /// Append a sample. Times must be strictly increasing and start at
    /// start_time; norms must be finite and >= 0. running_dissipation, when
    /// provided, is the value of int_0^t ||.||^2 accumulated by the integrator.
    void append(double time, const NormSample& s,
                std::optional<double> running_dissipation = std::nullopt);

    EquationKind equation() const { return equation_; }
    double alpha() const { return alpha_; }
    std::size_t size() const { return times_.size(); }
    bool empty() const { return times_.empty(); }

    const std::vector<double>& times() const { return times_; }
    const std::vector<NormSample>& samples() const { return samples_; }
    const std::vector<double>& running_sup_h2_sq() const { return running_sup_h2_sq_; }
    bool has_running_dissipation() const { return !running_dissipation_.empty(); }
    const std::vector<double>& running_dissipation() const { return running_dissipation_; }

    /// X_t for the trace prefix ending at sample i (inclusive).
    double xt_prefix(std::size_t i) const;

    /// Energy residual |E(t_i) - E(0) + 2 I(t_i)| / E(0) for the prefix
    /// ending at sample i; 0 when E(0) = 0 or i = 0.
    double energy_residual_prefix(std::size_t i) const;

private:
    EquationKind equation_;
    double alpha_;
    double start_time_;
    std::vector<double> times_;
    std::vector<NormSample> samples_;
    std::vector<double> running_sup_h2_sq_;
    std::vector<double> running_dissipation_; // empty unless produced by a run
    std::vector<double> top_sq_integral_;     // trapezoid of h_top^2, cumulative
    std::vector<double> diss_sq_trapz_;       // trapezoid of h_diss^2, cumulative
};

/// X_T = (sup_t Hdot^2)^2 + int_0^T (top-order norm)^2 dt over the sampled
/// trace (trapezoidal integral). Throws DomainError on an empty trace.
double xt_functional(const NormTrace& trace);

/// Relative residual |E(T) - E(0) + 2 int_0^T D dt| / E(0) with
/// E = ||.||_{L^2}^2 and D the squared dissipation-order norm. Uses the
/// integrator-accumulated dissipation integral when the trace carries one,
/// otherwise the trapezoid over the sampled times. Requires >= 2 samples
/// and E(0) > 0.
double energy_balance_report(const NormTrace& trace);

struct BootstrapVerdict {
    bool held = true;
    double first_violation_time = 0.0; // meaningful only when !held
};

/// Checks X_t <= 2 * c_bootstrap * h2_initial^2 at every sample time.
BootstrapVerdict bootstrap_monitor(const NormTrace& trace, double c_bootstrap,
                                   double h2_initial);

} // namespace oscf
