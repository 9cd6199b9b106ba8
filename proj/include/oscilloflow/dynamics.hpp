#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscilloflow/norms.hpp"
#include "oscilloflow/oscillation.hpp"
#include "oscilloflow/spectral_field.hpp"

namespace oscf {

enum class Health { ok, under_resolved, diverged };
std::string to_string(Health h);

struct InitialData {
    std::string generator; // "cmt", "random_band", "taylor_green_3d"
    double target_h2 = 1.0;
    std::uint64_t seed = 0;
};

struct SimulationConfig {
    EquationKind equation = EquationKind::SQG;
    double alpha = 0.5; // SQG dissipation exponent, in (0,1)
    TorusGrid grid{2, 64};
    OscillationProfile profile;
    double t_end = 1.0;
    double cfl = 0.5;
    double osc_fraction = 1.0 / 16.0; // max fraction of one b(N.) period per step
    double dt_max = 0.01;
    double diagnostic_interval = 0.01;
    InitialData initial_data;
    double tail_threshold = 1e-6;
    bool record_snapshots = false; // keep field snapshots at the diagnostic cadence

    void validate() const;
};

struct SimulationState {
    double time = 0.0;
    SpectralField field;
    std::uint64_t step_count = 0;
    Health health = Health::ok;
    double dissipation_integral = 0.0; // int_0^t ||.||^2 at dissipation order

    explicit SimulationState(SpectralField f) : field(std::move(f)) {}
};

/// -b(Nt) * dealias(u . grad theta) with u = riesz_velocity(theta); the
/// fractional dissipation is applied by the stepper's integrating factor.
SpectralField rhs_sqg(const SpectralField& theta, double t, const OscillationProfile& p,
                      double alpha);

/// -b(Nt) * leray_project(dealias(u . grad u)); the Laplacian is applied by
/// the stepper's integrating factor.
SpectralField rhs_ns(const SpectralField& u, double t, const OscillationProfile& p);

/// Pointwise max velocity magnitude of the state (|u| for NS, |riesz(theta)|
/// for SQG).
double max_velocity(const SimulationState& state, const SimulationConfig& cfg);

/// dt = min(cfl*dx/max(|u|,1e-8), osc_fraction*2pi/max(N,1), dt_max).
double choose_dt(const SimulationConfig& cfg, const SimulationState& state);

/// One integrating-factor RK4 step of length dt. The linear multiplier is
/// -|k|^2 (NS, unit viscosity) or -|k|^alpha (SQG); b(N.) is evaluated at the
/// stage times t, t+dt/2, t+dt. NS output is re-projected; reality is
/// re-symmetrized. Health flags are set on non-finite output or a spectral
/// tail fraction above tail_threshold.
SimulationState step(const SimulationState& state, double dt, const SimulationConfig& cfg);

struct Snapshot {
    double time;
    SpectralField field;
};

struct RunResult {
    NormTrace trace;
    SimulationState final_state;
    std::vector<Snapshot> snapshots; // populated when cfg.record_snapshots
};

/// Integrate from t = 0 to t_end with diagnostics every diagnostic_interval.
/// Terminates early (with the health flag recorded) on divergence or
/// resolution loss. Deterministic for a given config.
RunResult run_simulation(const SimulationConfig& cfg);

/// Same, but starting from a caller-provided state (used to resume from a
/// checkpoint). Diagnostics stay aligned to multiples of diagnostic_interval.
RunResult run_simulation_from(const SimulationConfig& cfg, SimulationState state);

/// Initial-data generators: "cmt" (sin x1 sin x2 + cos x2, 2D scalar),
/// "cos_x1" (single mode, for analytic decay runs), "random_band" (|k| <= 8,
/// Hermitian, mean-zero; Leray-projected for NS), "taylor_green_3d"
/// (divergence-free 3D vector). Each is rescaled so the full H^2 norm equals
/// target_h2.
SpectralField make_initial_data(const InitialData& data, const TorusGrid& grid,
                                EquationKind equation);

} // namespace oscf
