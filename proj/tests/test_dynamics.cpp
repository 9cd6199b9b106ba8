#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oscilloflow/dynamics.hpp"
#include "oscilloflow/fourier.hpp"
#include "oscilloflow/operators.hpp"
#include "oscilloflow/random_fields.hpp"
#include "support/analytic_traces.hpp"
#include "support/convolution_oracle.hpp"
#include "support/test_util.hpp"

using namespace oscf;
using namespace oscf::test;

namespace {

SimulationConfig sqg_config(int n, double alpha = 0.5) {
    SimulationConfig cfg;
    cfg.equation = EquationKind::SQG;
    cfg.alpha = alpha;
    cfg.grid = TorusGrid(2, n);
    cfg.profile = make_profile(OscillationKind::zero, 0.0);
    cfg.t_end = 1.0;
    cfg.dt_max = 0.01;
    cfg.diagnostic_interval = 0.1;
    cfg.initial_data = {"cos_x1", 2.0 * kPi, 0};
    return cfg;
}

} // namespace

TEST_CASE("rhs_sqg vanishes on a single cosine mode") {
    TorusGrid g(2, 32);
    SpectralField theta = scalar_field(g, [](double x, double, double) { return std::cos(x); });
    OscillationProfile p = make_profile(OscillationKind::constant_one, 1.0);
    CHECK(rhs_sqg(theta, 0.0, p, 0.5).max_abs() < 1e-14);
}

TEST_CASE("rhs_sqg of the zero field is zero") {
    TorusGrid g(2, 16);
    SpectralField theta(g, 1);
    OscillationProfile p = make_profile(OscillationKind::sine, 3.0);
    CHECK(rhs_sqg(theta, 0.2, p, 0.5).max_abs() == 0.0);
}

TEST_CASE("rhs_sqg matches the convolution oracle on cos(x1) + cos(x2)") {
    TorusGrid g(2, 16);
    SpectralField theta = scalar_field(
        g, [](double x, double y, double) { return std::cos(x) + std::cos(y); });
    OscillationProfile p = make_profile(OscillationKind::constant_one, 1.0);
    SpectralField got = rhs_sqg(theta, 0.0, p, 0.5);
    SpectralField want = rhs_sqg_oracle(theta, 0.0, p);
    // the nonlinearity cancels for this pair, so compare against the data scale
    CHECK(max_coeff_diff(got, want) < 1e-12 * theta.max_abs());
    CHECK(got.max_abs() < 1e-12 * theta.max_abs());
}

TEST_CASE("rhs_sqg matches the convolution oracle on a field with active nonlinearity") {
    TorusGrid g(2, 16);
    SpectralField theta = scalar_field(g, [](double x, double y, double) {
        return std::cos(x) + 0.7 * std::cos(2.0 * y) + 0.3 * std::sin(x + y);
    });
    OscillationProfile p = make_profile(OscillationKind::constant_one, 1.0);
    SpectralField got = rhs_sqg(theta, 0.0, p, 0.5);
    SpectralField want = rhs_sqg_oracle(theta, 0.0, p);
    CHECK(want.max_abs() > 0.01); // the oracle really is exercised
    CHECK(rel_coeff_diff(got, want) < 1e-12);
}

TEST_CASE("rhs_sqg matches the convolution oracle on seeded random fields") {
    TorusGrid g(2, 16);
    OscillationProfile p = make_profile(OscillationKind::sine, 2.0);
    for (std::uint64_t seed : {100, 101, 102, 103, 104}) {
        SpectralField theta = random_band_limited(g, 1, 5.0, seed);
        SpectralField got = rhs_sqg(theta, 0.3, p, 0.5);
        SpectralField want = rhs_sqg_oracle(theta, 0.3, p);
        CHECK(rel_coeff_diff(got, want) < 1e-10);
    }
}

TEST_CASE("rhs_sqg rejects a field with nonzero mean") {
    TorusGrid g(2, 16);
    SpectralField theta = scalar_field(g, [](double x, double, double) { return 1.0 + std::cos(x); });
    OscillationProfile p = make_profile(OscillationKind::sine, 1.0);
    CHECK_THROWS_AS(rhs_sqg(theta, 0.0, p, 0.5), DomainError);
}

TEST_CASE("rhs_ns of the zero field is zero") {
    TorusGrid g(3, 16);
    SpectralField u(g, 3);
    OscillationProfile p = make_profile(OscillationKind::sine, 1.0);
    CHECK(rhs_ns(u, 0.0, p).max_abs() == 0.0);
}

TEST_CASE("rhs_ns annihilates the 2D Taylor-Green vortex (pure-gradient advection)") {
    TorusGrid g(2, 32);
    SpectralField u = vector_field(
        g, {[](double x, double y, double) { return std::cos(x) * std::sin(y); },
            [](double x, double y, double) { return -std::sin(x) * std::cos(y); }});
    OscillationProfile p = make_profile(OscillationKind::constant_one, 1.0);
    SpectralField out = rhs_ns(u, 0.0, p);
    CHECK(out.max_abs() < 1e-13 * u.max_abs());
    SpectralField oracle = rhs_ns_oracle(u, 0.0, p);
    CHECK(oracle.max_abs() < 1e-13 * u.max_abs());
}

TEST_CASE("rhs_ns matches the convolution oracle on random solenoidal fields") {
    TorusGrid g(3, 16);
    OscillationProfile p = make_profile(OscillationKind::sine, 5.0);
    for (std::uint64_t seed : {7, 8, 9}) {
        SpectralField u = leray_project(random_band_limited(g, 3, 5.0, seed));
        SpectralField got = rhs_ns(u, 0.11, p);
        SpectralField want = rhs_ns_oracle(u, 0.11, p);
        CHECK(rel_coeff_diff(got, want) < 1e-10);
        CHECK(is_divergence_free(got));
    }
}

TEST_CASE("rhs_ns rejects a non-solenoidal field") {
    TorusGrid g(3, 16);
    SpectralField u = vector_field(g, {[](double x, double, double) { return std::cos(x); },
                                       [](double, double, double) { return 0.0; },
                                       [](double, double, double) { return 0.0; }});
    OscillationProfile p = make_profile(OscillationKind::sine, 1.0);
    CHECK_THROWS_AS(rhs_ns(u, 0.0, p), DomainError);
}

TEST_CASE("choose_dt: only dt_max binds on the zero field with N = 0") {
    SimulationConfig cfg = sqg_config(16);
    cfg.profile = make_profile(OscillationKind::zero, 0.0);
    cfg.dt_max = 0.01;
    SimulationState state(SpectralField(cfg.grid, 1));
    CHECK(choose_dt(cfg, state) == doctest::Approx(0.01));
}

TEST_CASE("choose_dt: oscillation-resolution bound at N = 1000") {
    SimulationConfig cfg = sqg_config(64);
    cfg.profile = make_profile(OscillationKind::sine, 1000.0);
    cfg.dt_max = 1.0;
    SimulationState state(SpectralField(cfg.grid, 1));
    CHECK(choose_dt(cfg, state) <= 2.0 * kPi / 16000.0 + 1e-15);
}

TEST_CASE("choose_dt: CFL clause with max|u| = 10 at n = 256") {
    SimulationConfig cfg;
    cfg.equation = EquationKind::NS;
    cfg.grid = TorusGrid(2, 256);
    cfg.profile = make_profile(OscillationKind::zero, 0.0);
    cfg.dt_max = 1.0;
    cfg.t_end = 1.0;
    SpectralField u = vector_field(
        cfg.grid, {[](double, double y, double) { return 10.0 * std::sin(y); },
                   [](double, double, double) { return 0.0; }});
    SimulationState state(std::move(u));
    const double dt = choose_dt(cfg, state);
    CHECK(dt <= kPi / 2560.0 * (1.0 + 1e-9));
    CHECK(dt >= kPi / 2560.0 * (1.0 - 1e-6)); // velocity max sampled on the grid
}

TEST_CASE("step with b = 0 reproduces the exact fractional-heat decay") {
    SimulationConfig cfg = sqg_config(32);
    cfg.profile = make_profile(OscillationKind::zero, 0.0);
    SpectralField theta0 = random_band_limited(cfg.grid, 1, 8.0, 77);
    SimulationState state(theta0);
    const double dt = 0.1;
    SimulationState next = step(state, dt, cfg);
    SpectralField want = heat_evolve(theta0, cfg.alpha, dt);
    CHECK(rel_coeff_diff(next.field, want) < 1e-12);
    CHECK(next.health == Health::ok);
    CHECK(next.step_count == 1);
}

TEST_CASE("step maps the zero field to the zero field") {
    SimulationConfig cfg = sqg_config(16);
    SimulationState state(SpectralField(cfg.grid, 1));
    SimulationState next = step(state, 0.05, cfg);
    CHECK(next.field.max_abs() == 0.0);
    CHECK(next.health == Health::ok);
}

TEST_CASE("step rejects nonpositive dt") {
    SimulationConfig cfg = sqg_config(16);
    SimulationState state(SpectralField(cfg.grid, 1));
    CHECK_THROWS_AS(step(state, 0.0, cfg), DomainError);
}

TEST_CASE("step self-convergence on a smooth nonlinear SQG problem") {
    SimulationConfig cfg = sqg_config(32);
    cfg.profile = make_profile(OscillationKind::sine, 1.0);
    cfg.initial_data = {"cmt", 2.0, 0};
    SpectralField theta0 = make_initial_data(cfg.initial_data, cfg.grid, cfg.equation);

    auto integrate = [&](double dt, int steps) {
        SimulationState s(theta0);
        for (int i = 0; i < steps; ++i) s = step(s, dt, cfg);
        return s.field;
    };
    const double T = 0.2;
    SpectralField ref = integrate(T / 32.0, 32); // dt/8 reference
    SpectralField a = integrate(T / 4.0, 4);
    SpectralField b = integrate(T / 8.0, 8);
    a -= ref;
    b -= ref;
    const double err_a = sobolev_norm(a, 0.0);
    const double err_b = sobolev_norm(b, 0.0);
    CHECK(err_a / err_b >= std::pow(2.0, 3.5));
}

TEST_CASE("step flags non-finite states as diverged") {
    SimulationConfig cfg = sqg_config(16);
    SpectralField bad(cfg.grid, 1);
    bad.at(0, 1) = {std::numeric_limits<double>::infinity(), 0.0};
    bad.at(0, 15) = {std::numeric_limits<double>::infinity(), 0.0};
    SimulationState state(bad);
    // is_mean_zero tolerates inf scale; the rhs product turns it into NaN
    SimulationState next = step(state, 0.01, cfg);
    CHECK(next.health == Health::diverged);
}

TEST_CASE("run_simulation with b = 0 matches the analytic heat solution") {
    SimulationConfig cfg = sqg_config(64);
    cfg.profile = make_profile(OscillationKind::zero, 0.0);
    cfg.t_end = 1.0;
    cfg.diagnostic_interval = 0.1;
    cfg.dt_max = 0.02;
    cfg.initial_data = {"cos_x1", 2.0 * kPi, 0}; // exactly cos(x1)
    RunResult res = run_simulation(cfg);
    CHECK(res.final_state.health == Health::ok);

    SpectralField want = scalar_field(
        cfg.grid, [](double x, double, double) { return std::exp(-1.0) * std::cos(x); });
    CHECK(rel_coeff_diff(res.final_state.field, want) < 1e-10);

    for (std::size_t i = 0; i < res.trace.size(); ++i) {
        const double t = res.trace.times()[i];
        const double want_l2 = kPi * std::sqrt(2.0) * std::exp(-t);
        CHECK(res.trace.samples()[i].l2 == doctest::Approx(want_l2).epsilon(1e-8));
    }
    CHECK(energy_balance_report(res.trace) <= 1e-8);
}

TEST_CASE("run_simulation on zero initial data keeps a zero trace") {
    SimulationConfig cfg = sqg_config(16);
    cfg.t_end = 0.3;
    SimulationState zero(SpectralField(cfg.grid, 1));
    RunResult res = run_simulation_from(cfg, std::move(zero));
    CHECK(res.final_state.health == Health::ok);
    for (const auto& s : res.trace.samples()) CHECK(s.l2 == 0.0);
}

TEST_CASE("a deliberately coarse grid trips the under-resolved detector") {
    SimulationConfig cfg = sqg_config(16);
    cfg.profile = make_profile(OscillationKind::constant_one, 0.0);
    cfg.initial_data = {"cmt", 30.0, 0};
    cfg.t_end = 2.0;
    cfg.diagnostic_interval = 0.05;
    RunResult res = run_simulation(cfg);
    CHECK(res.final_state.health == Health::under_resolved);
    CHECK(res.final_state.time < cfg.t_end);
}

TEST_CASE("healthy nonlinear run keeps the energy balance tight") {
    SimulationConfig cfg = sqg_config(64);
    cfg.profile = make_profile(OscillationKind::sine, 5.0);
    cfg.initial_data = {"cmt", 2.0, 0};
    cfg.t_end = 0.5;
    cfg.dt_max = 0.01;
    cfg.diagnostic_interval = 0.05;
    RunResult res = run_simulation(cfg);
    CHECK(res.final_state.health == Health::ok);
    CHECK(energy_balance_report(res.trace) <= 1e-5);
}

TEST_CASE("NS run preserves the solenoidal, reality and mean invariants") {
    SimulationConfig cfg;
    cfg.equation = EquationKind::NS;
    cfg.grid = TorusGrid(3, 24);
    cfg.profile = make_profile(OscillationKind::sine, 3.0);
    cfg.t_end = 0.2;
    cfg.dt_max = 0.02;
    cfg.diagnostic_interval = 0.05;
    cfg.initial_data = {"taylor_green_3d", 1.0, 0};
    cfg.record_snapshots = true;
    RunResult res = run_simulation(cfg);
    CHECK(res.final_state.health == Health::ok);
    for (const auto& snap : res.snapshots) {
        CHECK(is_divergence_free(snap.field));
        CHECK(hermitian_defect(snap.field) == 0.0);
        CHECK(std::abs(snap.field.mean(0)) == 0.0);
    }
}

TEST_CASE("SQG run keeps the k=0 mode of theta at zero") {
    SimulationConfig cfg = sqg_config(32);
    cfg.profile = make_profile(OscillationKind::sine, 2.0);
    cfg.initial_data = {"cmt", 2.0, 0};
    cfg.t_end = 0.3;
    cfg.record_snapshots = true;
    RunResult res = run_simulation(cfg);
    for (const auto& snap : res.snapshots) CHECK(std::abs(snap.field.mean(0)) == 0.0);
}

TEST_CASE("identical config produces bit-identical traces and states") {
    SimulationConfig cfg = sqg_config(32);
    cfg.profile = make_profile(OscillationKind::sine, 7.0);
    cfg.initial_data = {"random_band", 1.5, 99};
    cfg.t_end = 0.3;
    RunResult a = run_simulation(cfg);
    RunResult b = run_simulation(cfg);
    CHECK(a.final_state.field.bitwise_equal(b.final_state.field));
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace.samples()[i].l2 == b.trace.samples()[i].l2);
        CHECK(a.trace.samples()[i].h2 == b.trace.samples()[i].h2);
        CHECK(a.trace.samples()[i].h_top == b.trace.samples()[i].h_top);
    }
}

TEST_CASE("make_initial_data: cmt hits the target H2 norm exactly") {
    TorusGrid g(2, 64);
    SpectralField f = make_initial_data({"cmt", 5.0, 0}, g, EquationKind::SQG);
    CHECK(std::abs(h2_full_norm(f) - 5.0) <= 1e-12);
    // shape: sin x1 sin x2 + cos x2, rescaled
    const double scale = h2_full_norm(f);
    SpectralField want = scalar_field(g, [](double x, double y, double) {
        return std::sin(x) * std::sin(y) + std::cos(y);
    });
    want *= 5.0 / h2_full_norm(want);
    CHECK(rel_coeff_diff(f, want) < 1e-12);
    CHECK(scale > 0.0);
}

TEST_CASE("make_initial_data: random_band is deterministic per seed") {
    TorusGrid g(2, 64);
    SpectralField a = make_initial_data({"random_band", 2.0, 1234}, g, EquationKind::SQG);
    SpectralField b = make_initial_data({"random_band", 2.0, 1234}, g, EquationKind::SQG);
    SpectralField c = make_initial_data({"random_band", 2.0, 1235}, g, EquationKind::SQG);
    CHECK(a.bitwise_equal(b));
    CHECK_FALSE(a.bitwise_equal(c));
    CHECK(std::abs(h2_full_norm(a) - 2.0) <= 1e-12);
}

TEST_CASE("make_initial_data: taylor_green_3d is solenoidal to 1e-12") {
    TorusGrid g(3, 16);
    SpectralField f = make_initial_data({"taylor_green_3d", 3.0, 0}, g, EquationKind::NS);
    CHECK(is_divergence_free(f));
    CHECK(std::abs(h2_full_norm(f) - 3.0) <= 1e-12);
}

TEST_CASE("make_initial_data rejects generator/equation mismatches") {
    TorusGrid g2(2, 16);
    TorusGrid g3(3, 16);
    CHECK_THROWS_AS(make_initial_data({"cmt", 1.0, 0}, g3, EquationKind::NS), ConfigError);
    CHECK_THROWS_AS(make_initial_data({"taylor_green_3d", 1.0, 0}, g2, EquationKind::SQG),
                    ConfigError);
    CHECK_THROWS_AS(make_initial_data({"nope", 1.0, 0}, g2, EquationKind::SQG), ConfigError);
    CHECK_THROWS_AS(make_initial_data({"cmt", 0.0, 0}, g2, EquationKind::SQG), ConfigError);
}

TEST_CASE("config validation rejects bad setups before stepping") {
    SimulationConfig cfg = sqg_config(32);
    cfg.alpha = 1.5;
    CHECK_THROWS_AS(run_simulation(cfg), ConfigError);
    cfg = sqg_config(32);
    cfg.t_end = -1.0;
    CHECK_THROWS_AS(run_simulation(cfg), ConfigError);
    cfg = sqg_config(32);
    cfg.cfl = 1.5;
    CHECK_THROWS_AS(run_simulation(cfg), ConfigError);
    cfg = sqg_config(32);
    cfg.tail_threshold = 2.0;
    CHECK_THROWS_AS(run_simulation(cfg), ConfigError);
}

TEST_CASE("diverged states are detected via the health invariant") {
    SimulationConfig cfg = sqg_config(16);
    SpectralField bad(cfg.grid, 1);
    bad.at(0, 3) = {std::nan(""), 0.0};
    SimulationState s(bad);
    CHECK_FALSE(s.field.all_finite());
}
