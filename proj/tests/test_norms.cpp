#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oscilloflow/norms.hpp"
#include "oscilloflow/operators.hpp"
#include "oscilloflow/random_fields.hpp"
#include "support/analytic_traces.hpp"
#include "support/test_util.hpp"

using namespace oscf;
using namespace oscf::test;

TEST_CASE("sobolev norm of the zero field vanishes for any s") {
    TorusGrid g(2, 16);
    SpectralField f(g, 1);
    for (double s : {0.0, 0.5, 1.0, 2.5}) CHECK(sobolev_norm(f, s) == 0.0);
}

TEST_CASE("L2 norm of cos(x1) on the 2D torus is pi*sqrt(2)") {
    TorusGrid g(2, 32);
    SpectralField f = scalar_field(g, [](double x, double, double) { return std::cos(x); });
    CHECK(sobolev_norm(f, 0.0) == doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("H1 norm of cos(2 x1) is 2 pi sqrt(2)") {
    TorusGrid g(2, 32);
    SpectralField f = scalar_field(g, [](double x, double, double) { return std::cos(2 * x); });
    CHECK(sobolev_norm(f, 1.0) == doctest::Approx(2.0 * kPi * std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("negative s is a domain error") {
    TorusGrid g(2, 16);
    SpectralField f(g, 1);
    CHECK_THROWS_AS(sobolev_norm(f, -0.5), DomainError);
}

TEST_CASE("multiplier route: ||f||_{H^s} equals ||(-Lap)^{s/2} f||_{L^2}") {
    TorusGrid g(2, 32);
    SpectralField f = random_band_limited(g, 1, 8.0, 3);
    for (double s : {0.5, 1.0, 1.75}) {
        const double direct = sobolev_norm(f, s);
        const double via_op = sobolev_norm(fractional_laplacian(f, 0.5 * s), 0.0);
        CHECK(direct == doctest::Approx(via_op).epsilon(1e-12));
    }
}

TEST_CASE("spectral Hoelder interpolation holds with constant one") {
    TorusGrid g(2, 32);
    const double s0 = 0.5, s1 = 2.5;
    for (std::uint64_t seed : {1, 2, 3, 4, 5, 6, 7, 8}) {
        SpectralField f = random_band_limited(g, 1, 8.0, seed);
        for (double lambda : {0.25, 0.5, 0.75}) {
            const double s = (1.0 - lambda) * s0 + lambda * s1;
            const double lhs = sobolev_norm(f, s);
            const double rhs = std::pow(sobolev_norm(f, s0), 1.0 - lambda) *
                               std::pow(sobolev_norm(f, s1), lambda);
            CHECK(lhs <= rhs + 1e-12);
        }
    }
}

TEST_CASE("Hoelder interpolation is an equality on single-mode fields") {
    TorusGrid g(2, 32);
    SpectralField f = single_mode(g, 2, 1);
    const double lhs = sobolev_norm(f, 1.5);
    const double rhs = std::pow(sobolev_norm(f, 0.5), 0.5) * std::pow(sobolev_norm(f, 2.5), 0.5);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("gradient sup norm of a constant is zero") {
    TorusGrid g(2, 16);
    SpectralField f = scalar_field(g, [](double, double, double) { return 7.0; });
    CHECK(grad_sup_norm(f) < 1e-14);
}

TEST_CASE("gradient sup norm of cos(x1) is 1 within sampling error at n = 64") {
    TorusGrid g(2, 64);
    SpectralField f = scalar_field(g, [](double x, double, double) { return std::cos(x); });
    CHECK(std::abs(grad_sup_norm(f) - 1.0) <= 1e-3);
}

TEST_CASE("gradient sup norm of cos(2 x1) is 2 within sampling error") {
    TorusGrid g(2, 64);
    SpectralField f = scalar_field(g, [](double x, double, double) { return std::cos(2 * x); });
    CHECK(std::abs(grad_sup_norm(f) - 2.0) <= 1e-3);
}

namespace {

NormSample sample_with(double l2 = 0, double h_diss = 0, double h1 = 0, double h2 = 0,
                       double h_top = 0, double grad = 0) {
    NormSample s;
    s.l2 = l2;
    s.h_diss = h_diss;
    s.h1 = h1;
    s.h2 = h2;
    s.h_top = h_top;
    s.grad_linf = grad;
    return s;
}

} // namespace

TEST_CASE("xt functional of a single sample is the squared H2 norm") {
    NormTrace t(EquationKind::NS, 0.0);
    t.append(0.0, sample_with(1, 0, 0, 3, 0, 0));
    CHECK(xt_functional(t) == doctest::Approx(9.0));
}

TEST_CASE("xt functional of the zero trace is zero") {
    NormTrace t(EquationKind::NS, 0.0);
    t.append(0.0, sample_with());
    t.append(1.0, sample_with());
    CHECK(xt_functional(t) == 0.0);
}

TEST_CASE("xt functional trapezoid: (4 + 0)/2 = 2 over one unit interval") {
    NormTrace t(EquationKind::NS, 0.0);
    t.append(0.0, sample_with(0, 0, 0, 0, 2, 0));
    t.append(1.0, sample_with(0, 0, 0, 0, 0, 0));
    CHECK(xt_functional(t) == doctest::Approx(2.0));
}

TEST_CASE("xt functional rejects an empty trace") {
    NormTrace t(EquationKind::NS, 0.0);
    CHECK_THROWS_AS(xt_functional(t), DomainError);
}

TEST_CASE("xt functional is monotone under trace extension") {
    NormTrace t(EquationKind::SQG, 0.5);
    t.append(0.0, sample_with(1, 1, 1, 2, 3, 1));
    double prev = xt_functional(t);
    t.append(0.5, sample_with(0.9, 0.8, 0.9, 1.2, 2.0, 0.9));
    CHECK(xt_functional(t) >= prev);
    prev = xt_functional(t);
    t.append(1.0, sample_with(0.5, 0.4, 0.5, 0.7, 1.1, 0.5));
    CHECK(xt_functional(t) >= prev);
}

TEST_CASE("trace invariants: increasing times, finite norms, running sup") {
    NormTrace t(EquationKind::NS, 0.0);
    t.append(0.0, sample_with(1, 1, 1, 5, 1, 1));
    CHECK_THROWS_AS(t.append(0.0, sample_with()), DomainError);
    NormSample bad;
    bad.l2 = -1.0;
    CHECK_THROWS_AS(t.append(1.0, bad), DomainError);
    t.append(1.0, sample_with(1, 1, 1, 2, 1, 1));
    t.append(2.0, sample_with(1, 1, 1, 7, 1, 1));
    const auto& sup = t.running_sup_h2_sq();
    CHECK(sup[0] == 25.0);
    CHECK(sup[1] == 25.0);
    CHECK(sup[2] == 49.0);
}

TEST_CASE("energy balance: constant trace with zero dissipation has residual 0") {
    NormTrace t(EquationKind::NS, 0.0);
    t.append(0.0, sample_with(2, 0, 0, 0, 0, 0));
    t.append(1.0, sample_with(2, 0, 0, 0, 0, 0));
    CHECK(energy_balance_report(t) == 0.0);
}

TEST_CASE("energy balance on the exact fractional-heat flow, densely sampled") {
    TorusGrid g(2, 32);
    SpectralField f0 = scalar_field(g, [](double x, double, double) { return std::cos(x); });
    NormTrace dense = heat_trace(f0, 0.5, 1.0, 1001);
    CHECK(energy_balance_report(dense) <= 1e-6);
}

TEST_CASE("energy balance residual grows under coarse sampling") {
    TorusGrid g(2, 32);
    SpectralField f0 = scalar_field(g, [](double x, double, double) { return std::cos(x); });
    const double dense = energy_balance_report(heat_trace(f0, 0.5, 1.0, 1001));
    const double coarse = energy_balance_report(heat_trace(f0, 0.5, 1.0, 2));
    CHECK(coarse > dense);
}

TEST_CASE("energy balance residual converges at second order in the sample spacing") {
    TorusGrid g(2, 32);
    SpectralField f0 = scalar_field(g, [](double x, double, double) { return std::cos(x); });
    const double r_h = energy_balance_report(heat_trace(f0, 0.5, 1.0, 51));
    const double r_h2 = energy_balance_report(heat_trace(f0, 0.5, 1.0, 101));
    const double order = std::log2(r_h / r_h2);
    CHECK(order >= 1.8);
}

TEST_CASE("energy balance rejects zero initial energy and short traces") {
    NormTrace t(EquationKind::NS, 0.0);
    t.append(0.0, sample_with());
    CHECK_THROWS_AS(energy_balance_report(t), DomainError);
    t.append(1.0, sample_with());
    CHECK_THROWS_AS(energy_balance_report(t), DomainError); // E(0) = 0
}

TEST_CASE("bootstrap monitor holds on the zero trajectory") {
    NormTrace t(EquationKind::NS, 0.0);
    t.append(0.0, sample_with());
    t.append(1.0, sample_with());
    const BootstrapVerdict v = bootstrap_monitor(t, 1.0, 1.0);
    CHECK(v.held);
}

TEST_CASE("bootstrap monitor reports the first violation time") {
    NormTrace t(EquationKind::NS, 0.0);
    t.append(0.0, sample_with(1, 0, 0, 1, 0, 0));
    t.append(0.5, sample_with(1, 0, 0, 10, 0, 0)); // X_t jumps to 100 > 2
    t.append(1.0, sample_with(1, 0, 0, 10, 0, 0));
    const BootstrapVerdict v = bootstrap_monitor(t, 1.0, 1.0);
    CHECK_FALSE(v.held);
    CHECK(v.first_violation_time == doctest::Approx(0.5));
}

TEST_CASE("bootstrap monitor holds along the decaying heat flow at C = 1") {
    TorusGrid g(2, 32);
    SpectralField f0 = scalar_field(g, [](double x, double, double) { return std::cos(x); });
    NormTrace t = heat_trace(f0, 0.5, 1.0, 101);
    const double h2_init = h2_full_norm(f0);
    CHECK(bootstrap_monitor(t, 1.0, h2_init).held);
}

TEST_CASE("bootstrap monitor validates its arguments") {
    NormTrace t(EquationKind::NS, 0.0);
    t.append(0.0, sample_with());
    CHECK_THROWS_AS(bootstrap_monitor(t, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(bootstrap_monitor(t, 0.0, 1.0), DomainError);
}

TEST_CASE("sup norm matches the analytic maximum of a smooth field") {
    TorusGrid g(2, 64);
    SpectralField f = scalar_field(
        g, [](double x, double y, double) { return std::cos(x) + 0.5 * std::sin(2 * y); });
    double expected = 0.0;
    for (double v : inverse_transform(f)) expected = std::max(expected, std::abs(v));
    CHECK(sup_norm(f) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(sup_norm(f) <= 1.5 + 1e-9);
}

TEST_CASE("h2_full combines the L2 and Hdot2 parts") {
    TorusGrid g(2, 32);
    SpectralField f = scalar_field(g, [](double x, double, double) { return std::cos(x); });
    const double l2 = sobolev_norm(f, 0.0);
    const double h2 = sobolev_norm(f, 2.0);
    CHECK(h2_full_norm(f) == doctest::Approx(std::sqrt(l2 * l2 + h2 * h2)).epsilon(1e-13));
}
