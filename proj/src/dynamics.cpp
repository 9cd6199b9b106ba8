#include "oscilloflow/dynamics.hpp"

#include <cmath>

#include "oscilloflow/fourier.hpp"
#include "oscilloflow/operators.hpp"
#include "oscilloflow/random_fields.hpp"

namespace oscf {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::string to_string(Health h) {
    switch (h) {
        case Health::ok: return "ok";
        case Health::under_resolved: return "under_resolved";
        case Health::diverged: return "diverged";
    }
    return "?";
}

void SimulationConfig::validate() const {
    if (equation == EquationKind::SQG) {
        if (grid.dim() != 2) throw ConfigError("SQG requires dim 2");
        if (!(alpha > 0.0 && alpha < 1.0))
            throw ConfigError("SQG requires alpha in (0,1), got " + std::to_string(alpha));
    }
    if (!(t_end > 0.0)) throw ConfigError("t_end must be > 0");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must be in (0,1]");
    if (!(osc_fraction > 0.0)) throw ConfigError("osc_fraction must be > 0");
    if (!(dt_max > 0.0)) throw ConfigError("dt_max must be > 0");
    if (!(diagnostic_interval > 0.0)) throw ConfigError("diagnostic_interval must be > 0");
    if (!(tail_threshold > 0.0 && tail_threshold < 1.0))
        throw ConfigError("tail_threshold must be in (0,1)");
    if (profile.n_multiplier < 0.0) throw ConfigError("oscillation N must be >= 0");
    if (!(initial_data.target_h2 > 0.0)) throw ConfigError("target_h2 must be > 0");
    if (profile.kind == OscillationKind::tabulated && profile.table.empty())
        throw ConfigError("tabulated oscillation profile needs a table");
}

namespace {

double tail_energy_fraction(const SpectralField& f) {
    const double cutoff = 0.3 * static_cast<double>(f.grid().points_per_axis());
    double total = 0.0, tail = 0.0;
    for (int c = 0; c < f.components(); ++c) {
        auto span = f.component(c);
        for_each_mode(f.grid(), [&](std::size_t idx, const std::array<int, 3>& k) {
            const double e = std::norm(span[idx]);
            total += e;
            const int kmax = std::max({std::abs(k[0]), std::abs(k[1]), std::abs(k[2])});
            if (static_cast<double>(kmax) > cutoff) tail += e;
        });
    }
    return total > 0.0 ? tail / total : 0.0;
}

double dissipation_order(const SimulationConfig& cfg) {
    return cfg.equation == EquationKind::NS ? 1.0 : 0.5 * cfg.alpha;
}

// (2pi)^d sum |k|^{2s} |fhat|^2, the instantaneous dissipation rate /2.
double dissipation_rate(const SpectralField& f, double s) {
    const double nrm = sobolev_norm(f, s);
    return nrm * nrm;
}

SpectralField rhs(const SpectralField& w, double t, const SimulationConfig& cfg) {
    if (cfg.equation == EquationKind::SQG) return rhs_sqg(w, t, cfg.profile, cfg.alpha);
    return rhs_ns(w, t, cfg.profile);
}

// exp(L * tau) with L = -|k|^2 (NS) or -|k|^alpha (SQG).
std::vector<double> decay_factors(const SimulationConfig& cfg, double tau) {
    const TorusGrid& g = cfg.grid;
    std::vector<double> e(g.size());
    const bool ns = cfg.equation == EquationKind::NS;
    const double half_alpha = 0.5 * cfg.alpha;
    for_each_mode(g, [&](std::size_t idx, const std::array<int, 3>& k) {
        const double k2 = static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
        const double lam = ns ? k2 : std::pow(k2, half_alpha);
        e[idx] = std::exp(-lam * tau);
    });
    return e;
}

void scale_modes(SpectralField& f, const std::vector<double>& factors) {
    for (int c = 0; c < f.components(); ++c) {
        auto span = f.component(c);
        for (std::size_t i = 0; i < span.size(); ++i) span[i] *= factors[i];
    }
}

} // namespace

SpectralField rhs_sqg(const SpectralField& theta, double t, const OscillationProfile& p,
                      double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("rhs_sqg: alpha must be in (0,1)");
    if (!is_mean_zero(theta)) throw DomainError("rhs_sqg: theta must be mean-zero");
    const SpectralField u = riesz_velocity(theta);
    SpectralField adv = advect(u, theta);
    dealias_in_place(adv);
    adv *= -p.evaluate(t);
    return adv;
}

SpectralField rhs_ns(const SpectralField& u, double t, const OscillationProfile& p) {
    if (u.components() != u.grid().dim()) throw ConfigError("rhs_ns: requires a vector field");
    if (!is_divergence_free(u)) throw DomainError("rhs_ns: u must be divergence-free");
    SpectralField adv = advect(u, u);
    dealias_in_place(adv);
    SpectralField out = leray_project(adv);
    out *= -p.evaluate(t);
    return out;
}

double max_velocity(const SimulationState& state, const SimulationConfig& cfg) {
    if (cfg.equation == EquationKind::NS) return sup_norm(state.field);
    return sup_norm(riesz_velocity(state.field));
}

double choose_dt(const SimulationConfig& cfg, const SimulationState& state) {
    if (state.health != Health::ok) throw DomainError("choose_dt: state is not healthy");
    const double vmax = std::max(max_velocity(state, cfg), 1e-8);
    const double dt_cfl = cfg.cfl * cfg.grid.dx() / vmax;
    const double dt_osc = cfg.osc_fraction * kTwoPi / std::max(cfg.profile.n_multiplier, 1.0);
    return std::min({dt_cfl, dt_osc, cfg.dt_max});
}

SimulationState step(const SimulationState& state, double dt, const SimulationConfig& cfg) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("step: dt must be positive");

    const double t = state.time;
    const std::vector<double> e_half = decay_factors(cfg, 0.5 * dt);
    const std::vector<double> e_full = decay_factors(cfg, dt);
    const SpectralField& w = state.field;

    const SpectralField n1 = rhs(w, t, cfg);

    SpectralField w2 = w;
    {
        SpectralField tmp = n1;
        tmp *= 0.5 * dt;
        w2 += tmp;
        scale_modes(w2, e_half);
    }
    const SpectralField n2 = rhs(w2, t + 0.5 * dt, cfg);

    SpectralField w3 = w;
    scale_modes(w3, e_half);
    {
        SpectralField tmp = n2;
        tmp *= 0.5 * dt;
        w3 += tmp;
    }
    const SpectralField n3 = rhs(w3, t + 0.5 * dt, cfg);

    SpectralField w4 = w;
    scale_modes(w4, e_full);
    {
        SpectralField tmp = n3;
        scale_modes(tmp, e_half);
        tmp *= dt;
        w4 += tmp;
    }
    const SpectralField n4 = rhs(w4, t + dt, cfg);

    SpectralField next = w;
    scale_modes(next, e_full);
    {
        SpectralField acc = n1;
        scale_modes(acc, e_full);
        SpectralField mid = n2;
        mid += n3;
        mid *= 2.0;
        scale_modes(mid, e_half);
        acc += mid;
        acc += n4;
        acc *= dt / 6.0;
        next += acc;
    }

    SimulationState out(std::move(next));
    out.time = t + dt;
    out.step_count = state.step_count + 1;

    if (!out.field.all_finite()) {
        out.health = Health::diverged;
        out.dissipation_integral = state.dissipation_integral;
        return out;
    }

    if (cfg.equation == EquationKind::NS) out.field = leray_project(out.field);
    symmetrize_reality(out.field);
    if (cfg.equation == EquationKind::SQG)
        for (int c = 0; c < out.field.components(); ++c) out.field.at(c, 0) = {0.0, 0.0};

    // RK4 quadrature of the augmented integral dI/dt = ||w||^2 at the
    // dissipation order, evaluated on the stage states.
    const double s = dissipation_order(cfg);
    out.dissipation_integral =
        state.dissipation_integral +
        dt / 6.0 *
            (dissipation_rate(w, s) + 2.0 * dissipation_rate(w2, s) +
             2.0 * dissipation_rate(w3, s) + dissipation_rate(w4, s));

    if (tail_energy_fraction(out.field) > cfg.tail_threshold)
        out.health = Health::under_resolved;
    return out;
}

namespace {

NormSample measure(const SpectralField& f, const SimulationConfig& cfg) {
    NormSample s;
    s.l2 = sobolev_norm(f, 0.0);
    s.h1 = sobolev_norm(f, 1.0);
    s.h2 = sobolev_norm(f, 2.0);
    if (cfg.equation == EquationKind::NS) {
        s.h_diss = s.h1;
        s.h_top = sobolev_norm(f, 3.0);
    } else {
        s.h_diss = sobolev_norm(f, 0.5 * cfg.alpha);
        s.h_top = sobolev_norm(f, 2.0 + 0.5 * cfg.alpha);
    }
    s.grad_linf = grad_sup_norm(f);
    return s;
}

} // namespace

RunResult run_simulation_from(const SimulationConfig& cfg, SimulationState state) {
    cfg.validate();
    if (state.field.grid() != cfg.grid)
        throw ConfigError("run_simulation_from: state grid does not match config");
    if (state.time < 0.0 || state.time >= cfg.t_end)
        throw ConfigError("run_simulation_from: state time outside [0, t_end)");

    NormTrace trace(cfg.equation, cfg.alpha, state.time);
    RunResult result{std::move(trace), std::move(state), {}};

    auto emit = [&](const SimulationState& s) {
        result.trace.append(s.time, measure(s.field, cfg), s.dissipation_integral);
        if (cfg.record_snapshots) result.snapshots.push_back({s.time, s.field});
    };

    emit(result.final_state);

    const double diag = cfg.diagnostic_interval;
    // Diagnostic boundaries are absolute multiples of diag so a resumed run
    // revisits exactly the times the uninterrupted run would.
    long next_m = static_cast<long>(std::floor(result.final_state.time / diag + 1e-9)) + 1;

    while (result.final_state.time < cfg.t_end && result.final_state.health == Health::ok) {
        const double t = result.final_state.time;
        const double boundary = std::min(static_cast<double>(next_m) * diag, cfg.t_end);
        if (t >= boundary) { // landed on a boundary through rounding: emit, move on
            emit(result.final_state);
            if (boundary == static_cast<double>(next_m) * diag) ++next_m;
            continue;
        }
        const double dt_raw = choose_dt(cfg, result.final_state);
        const bool clipped = dt_raw >= (boundary - t) * (1.0 - 1e-12);
        const double dt = clipped ? boundary - t : dt_raw;

        SimulationState next = step(result.final_state, dt, cfg);
        if (clipped) next.time = boundary;
        result.final_state = std::move(next);

        if (result.final_state.health != Health::ok) break;
        if (clipped) {
            emit(result.final_state);
            if (boundary == static_cast<double>(next_m) * diag) ++next_m;
        }
    }
    return result;
}

RunResult run_simulation(const SimulationConfig& cfg) {
    cfg.validate();
    SpectralField field = make_initial_data(cfg.initial_data, cfg.grid, cfg.equation);
    dealias_in_place(field);
    SimulationState state(std::move(field));
    return run_simulation_from(cfg, std::move(state));
}

SpectralField make_initial_data(const InitialData& data, const TorusGrid& grid,
                                EquationKind equation) {
    if (!(data.target_h2 > 0.0)) throw ConfigError("make_initial_data: target_h2 must be > 0");

    SpectralField f(grid, 1);
    if (data.generator == "cmt") {
        if (equation != EquationKind::SQG || grid.dim() != 2)
            throw ConfigError("cmt generator is a 2D scalar (SQG) field");
        const int n = grid.points_per_axis();
        auto at = [&](int k0, int k1) -> std::complex<double>& {
            const auto i0 = static_cast<std::size_t>((k0 + n) % n);
            const auto i1 = static_cast<std::size_t>((k1 + n) % n);
            return f.at(0, i0 * static_cast<std::size_t>(n) + i1);
        };
        // sin x1 sin x2 + cos x2
        at(1, -1) = {0.25, 0.0};
        at(-1, 1) = {0.25, 0.0};
        at(1, 1) = {-0.25, 0.0};
        at(-1, -1) = {-0.25, 0.0};
        at(0, 1) = {0.5, 0.0};
        at(0, -1) = {0.5, 0.0};
    } else if (data.generator == "cos_x1") {
        if (equation != EquationKind::SQG || grid.dim() != 2)
            throw ConfigError("cos_x1 generator is a 2D scalar (SQG) field");
        const int n = grid.points_per_axis();
        f.at(0, static_cast<std::size_t>(1) * static_cast<std::size_t>(n)) = {0.5, 0.0};
        f.at(0, static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n)) = {0.5, 0.0};
    } else if (data.generator == "random_band") {
        const int components = equation == EquationKind::NS ? grid.dim() : 1;
        f = random_band_limited(grid, components, 8.0, data.seed);
        if (equation == EquationKind::NS) f = leray_project(f);
    } else if (data.generator == "taylor_green_3d") {
        if (equation != EquationKind::NS || grid.dim() != 3)
            throw ConfigError("taylor_green_3d generator requires NS in 3D");
        f = SpectralField(grid, 3);
        const int n = grid.points_per_axis();
        auto idx = [&](int k0, int k1, int k2) {
            const auto i0 = static_cast<std::size_t>((k0 + n) % n);
            const auto i1 = static_cast<std::size_t>((k1 + n) % n);
            const auto i2 = static_cast<std::size_t>((k2 + n) % n);
            return (i0 * static_cast<std::size_t>(n) + i1) * static_cast<std::size_t>(n) + i2;
        };
        // u = (sin x1 cos x2 cos x3, -cos x1 sin x2 cos x3, 0)
        for (int s0 : {-1, 1})
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    const std::size_t i = idx(s0, s1, s2);
                    f.at(0, i) = {0.0, -static_cast<double>(s0) / 8.0};
                    f.at(1, i) = {0.0, static_cast<double>(s1) / 8.0};
                }
    } else {
        throw ConfigError("unknown initial-data generator '" + data.generator + "'");
    }

    const double h2 = h2_full_norm(f);
    if (h2 == 0.0) throw ConfigError("make_initial_data: generator produced a zero field");
    f *= data.target_h2 / h2;
    return f;
}

} // namespace oscf
