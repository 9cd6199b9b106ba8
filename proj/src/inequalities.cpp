#include "oscilloflow/inequalities.hpp"

#include <cmath>

#include "oscilloflow/operators.hpp"
#include "oscilloflow/random_fields.hpp"

namespace oscf {

namespace {

const std::vector<InequalityInfo> kAll = {
    // id, name, dim, comps, trajectory, tight, sup_type
    {InequalityId::NS_11_4, "NS_11_4", 3, 3, true, false, true},
    {InequalityId::NS_9_4, "NS_9_4", 3, 3, true, false, true},
    {InequalityId::NS_5_2, "NS_5_2", 3, 3, true, false, true},
    {InequalityId::GN_u_inf, "GN_u_inf", 3, 3, false, false, true},
    {InequalityId::GN_grad_inf, "GN_grad_inf", 3, 3, false, false, true},
    {InequalityId::GN_H1_a, "GN_H1_a", 3, 3, false, true, false},
    {InequalityId::GN_H1_b, "GN_H1_b", 3, 3, false, true, false},
    {InequalityId::GN_H2, "GN_H2", 3, 3, false, true, false},
    {InequalityId::SQG_est1, "SQG_est1", 2, 1, true, false, true},
    {InequalityId::SQG_est2, "SQG_est2", 2, 1, true, false, true},
    {InequalityId::SQG_est3, "SQG_est3", 2, 1, true, false, true},
    {InequalityId::SQG_est4, "SQG_est4", 2, 1, true, false, true},
    {InequalityId::SQG_grad_inf, "SQG_grad_inf", 2, 1, false, false, true},
    {InequalityId::SQG_H1, "SQG_H1", 2, 1, false, true, false},
    {InequalityId::SQG_H1alpha, "SQG_H1alpha", 2, 1, false, true, false},
};

} // namespace

const std::vector<InequalityInfo>& all_inequalities() { return kAll; }

const InequalityInfo& inequality_info(InequalityId id) {
    for (const auto& info : kAll)
        if (info.id == id) return info;
    throw ConfigError("unknown inequality id");
}

InequalityId inequality_from_name(const std::string& name) {
    for (const auto& info : kAll)
        if (info.name == name) return info.id;
    throw ConfigError("unknown inequality '" + name + "'");
}

namespace {

RatioValue make_ratio(double lhs, double rhs) {
    if (rhs == 0.0) return {0.0, true};
    return {lhs / rhs, false};
}

void check_field_matches(const SpectralField& f, const InequalityInfo& info) {
    if (f.grid().dim() != info.dim)
        throw ConfigError(info.name + " expects a " + std::to_string(info.dim) + "D field");
    const int want = info.components == 1 ? 1 : f.grid().dim();
    if (f.components() != want)
        throw ConfigError(info.name + " expects " + std::to_string(want) + " component(s)");
}

} // namespace

RatioValue pointwise_ratio(const SpectralField& f, InequalityId id, double alpha) {
    const InequalityInfo& info = inequality_info(id);
    if (info.trajectory)
        throw ConfigError(info.name + " is a trajectory estimate; use trajectory_ratio");
    check_field_matches(f, info);
    if (!is_mean_zero(f)) throw DomainError("pointwise_ratio: field must be mean-zero");

    switch (id) {
        case InequalityId::GN_u_inf:
            return make_ratio(sup_norm(f), std::sqrt(sobolev_norm(f, 0.0)) *
                                               std::sqrt(sobolev_norm(f, 3.0)));
        case InequalityId::GN_grad_inf:
            return make_ratio(grad_sup_norm(f), std::pow(sobolev_norm(f, 0.0), 1.0 / 6.0) *
                                                    std::pow(sobolev_norm(f, 3.0), 5.0 / 6.0));
        case InequalityId::GN_H1_a:
            return make_ratio(sobolev_norm(f, 1.0), std::pow(sobolev_norm(f, 0.0), 2.0 / 3.0) *
                                                        std::pow(sobolev_norm(f, 3.0), 1.0 / 3.0));
        case InequalityId::GN_H1_b:
            return make_ratio(sobolev_norm(f, 1.0), std::sqrt(sobolev_norm(f, 0.0)) *
                                                        std::sqrt(sobolev_norm(f, 2.0)));
        case InequalityId::GN_H2:
            return make_ratio(sobolev_norm(f, 2.0), std::pow(sobolev_norm(f, 0.0), 1.0 / 3.0) *
                                                        std::pow(sobolev_norm(f, 3.0), 2.0 / 3.0));
        case InequalityId::SQG_grad_inf:
            return make_ratio(grad_sup_norm(f),
                              std::pow(sobolev_norm(f, 2.0 + 0.5 * alpha), 1.0 - 0.25 * alpha) *
                                  std::pow(sobolev_norm(f, 0.5 * alpha), 0.25 * alpha));
        case InequalityId::SQG_H1:
            return make_ratio(sobolev_norm(f, 1.0), std::sqrt(sobolev_norm(f, 2.0)) *
                                                        std::sqrt(sobolev_norm(f, 0.0)));
        case InequalityId::SQG_H1alpha:
            return make_ratio(sobolev_norm(f, 1.0 + alpha),
                              std::pow(sobolev_norm(f, 2.0 + 0.5 * alpha), 0.5 + 0.25 * alpha) *
                                  std::pow(sobolev_norm(f, 0.5 * alpha), 0.5 - 0.25 * alpha));
        default:
            throw ConfigError("pointwise_ratio: unhandled id");
    }
}

RatioReport ensemble_report(InequalityId id, int count, std::uint64_t seed,
                            const TorusGrid& grid, double alpha) {
    if (count < 10) throw ConfigError("ensemble_report: count must be >= 10");
    const InequalityInfo& info = inequality_info(id);
    if (grid.dim() != info.dim)
        throw ConfigError("ensemble_report: grid dim does not match " + info.name);

    RatioReport report;
    report.id = id;
    report.seed = seed;
    const int components = info.components == 1 ? 1 : grid.dim();
    double sum = 0.0;
    for (int i = 0; i < count; ++i) {
        SpectralField f = random_band_limited(grid, components, 8.0, seed + static_cast<std::uint64_t>(i));
        const RatioValue r = pointwise_ratio(f, id, alpha);
        if (r.degenerate) {
            ++report.degenerate_count;
            continue;
        }
        report.ratios.push_back(r.value);
        report.max_ratio = std::max(report.max_ratio, r.value);
        sum += r.value;
    }
    report.ensemble_size = static_cast<int>(report.ratios.size());
    if (report.ensemble_size > 0) report.mean_ratio = sum / report.ensemble_size;
    if (info.tight_constant_one) report.tight_ok = report.max_ratio <= 1.0 + 1e-10;
    return report;
}

namespace {

struct SnapshotNorms {
    std::vector<double> t, l2, h1, h2, h3, h2a, ha2, h1a, grad_inf, adv_h1;
};

SnapshotNorms collect_norms(const std::vector<Snapshot>& snaps, const InequalityInfo& info,
                            double alpha) {
    SnapshotNorms n;
    const bool ns = info.dim == 3;
    for (const auto& s : snaps) {
        check_field_matches(s.field, info);
        n.t.push_back(s.time);
        n.l2.push_back(sobolev_norm(s.field, 0.0));
        n.h1.push_back(sobolev_norm(s.field, 1.0));
        n.h2.push_back(sobolev_norm(s.field, 2.0));
        n.grad_inf.push_back(grad_sup_norm(s.field));
        if (ns) {
            n.h3.push_back(sobolev_norm(s.field, 3.0));
            if (info.id == InequalityId::NS_5_2) {
                SpectralField adv = dealias(advect(s.field, s.field));
                n.adv_h1.push_back(sobolev_norm(adv, 1.0));
            }
        } else {
            n.h2a.push_back(sobolev_norm(s.field, 2.0 + 0.5 * alpha));
            n.ha2.push_back(sobolev_norm(s.field, 0.5 * alpha));
            n.h1a.push_back(sobolev_norm(s.field, 1.0 + alpha));
        }
    }
    return n;
}

double trapz(const std::vector<double>& t, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i)
        s += 0.5 * (t[i] - t[i - 1]) * (y[i] + y[i - 1]);
    return s;
}

double sup(const std::vector<double>& y) {
    double m = 0.0;
    for (double v : y) m = std::max(m, v);
    return m;
}

double l2t(const std::vector<double>& t, const std::vector<double>& y) {
    std::vector<double> sq(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) sq[i] = y[i] * y[i];
    return std::sqrt(trapz(t, sq));
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
    return r;
}

} // namespace

RatioValue trajectory_ratio(const std::vector<Snapshot>& snapshots, InequalityId id,
                            double alpha) {
    const InequalityInfo& info = inequality_info(id);
    if (!info.trajectory)
        throw ConfigError(info.name + " is a pointwise estimate; use pointwise_ratio");
    if (snapshots.size() < 2) throw ConfigError("trajectory_ratio: need >= 2 snapshots");

    const SnapshotNorms n = collect_norms(snapshots, info, alpha);
    switch (id) {
        case InequalityId::NS_11_4: {
            const double lhs = trapz(n.t, mul(mul(n.grad_inf, n.h2), n.h3));
            const double rhs = std::pow(sup(n.l2), 0.25) * (std::pow(sup(n.h2), 2.75) +
                                                            std::pow(l2t(n.t, n.h3), 2.75));
            return make_ratio(lhs, rhs);
        }
        case InequalityId::NS_9_4: {
            const double lhs = trapz(n.t, mul(mul(n.grad_inf, n.h1), n.h3));
            const double rhs = std::pow(sup(n.l2), 0.75) * (std::pow(sup(n.h2), 2.25) +
                                                            std::pow(l2t(n.t, n.h3), 2.25));
            return make_ratio(lhs, rhs);
        }
        case InequalityId::NS_5_2: {
            const double lhs = trapz(n.t, mul(mul(n.grad_inf, n.h1), n.adv_h1));
            const double rhs = std::pow(sup(n.l2), 1.5) * (std::pow(sup(n.h2), 2.5) +
                                                           std::pow(l2t(n.t, n.h3), 2.5));
            return make_ratio(lhs, rhs);
        }
        case InequalityId::SQG_est1: {
            const double lhs = trapz(n.t, mul(mul(n.h2a, n.grad_inf), n.h2));
            const double p = 0.25 * (12.0 - alpha);
            const double rhs = std::pow(sup(n.ha2), 0.25 * alpha) *
                               (std::pow(l2t(n.t, n.h2a), p) + std::pow(l2t(n.t, n.h2), p));
            return make_ratio(lhs, rhs);
        }
        case InequalityId::SQG_est2: {
            const double lhs = trapz(n.t, mul(mul(n.h1a, n.grad_inf), n.h1));
            const double a = l2t(n.t, n.h2a), b = l2t(n.t, n.h2);
            const double rhs =
                std::sqrt(sup(n.ha2)) * std::sqrt(sup(n.l2)) * (a * a + b * b);
            return make_ratio(lhs, rhs);
        }
        case InequalityId::SQG_est3: {
            const double lhs = trapz(n.t, mul(mul(n.grad_inf, n.grad_inf), mul(n.h1, n.h1)));
            const double p = 0.5 * (6.0 - alpha);
            const double rhs = sup(n.l2) * std::pow(sup(n.ha2), 0.5 * alpha) *
                               (std::pow(l2t(n.t, n.h2a), p) + std::pow(l2t(n.t, n.h2), p));
            return make_ratio(lhs, rhs);
        }
        case InequalityId::SQG_est4: {
            const double lhs = trapz(n.t, mul(mul(n.grad_inf, n.grad_inf), mul(n.l2, n.h2)));
            const double p = 0.5 * (6.0 - alpha);
            const double rhs = sup(n.l2) * std::pow(sup(n.ha2), 0.5 * alpha) *
                               (std::pow(l2t(n.t, n.h2a), p) + std::pow(l2t(n.t, n.h2), p));
            return make_ratio(lhs, rhs);
        }
        default:
            throw ConfigError("trajectory_ratio: unhandled id");
    }
}

MollifierReport mollifier_checks(const SpectralField& f, double s, int m1, int m2,
                                 const std::vector<double>& eps_list) {
    if (!(s > 0.0 && s <= 1.0)) throw ConfigError("mollifier_checks: s must be in (0,1]");
    if (m1 < 0 || m2 < 1) throw ConfigError("mollifier_checks: need m1 >= 0, m2 >= 1");
    if (eps_list.size() < 3)
        throw ConfigError("mollifier_checks: need at least 3 epsilon values");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0 && eps_list[i] < 1.0))
            throw ConfigError("mollifier_checks: epsilon values must lie in (0,1)");
        if (i > 0 && eps_list[i] >= eps_list[i - 1])
            throw ConfigError("mollifier_checks: epsilon values must decrease");
    }

    MollifierReport report;
    if (f.max_abs() == 0.0) {
        report.degenerate = true;
        return report;
    }

    const double hs = sobolev_norm(f, s);
    const double hm1 = sobolev_norm(f, static_cast<double>(m1));
    report.eps = eps_list;
    for (double eps : eps_list) {
        SpectralField fe = mollify(f, eps);
        SpectralField diff = f;
        diff -= fe;
        const double d = sobolev_norm(diff, 0.0);
        report.diff_l2.push_back(d);
        report.approx_ratios.push_back(hs > 0.0 ? d / (std::pow(eps, s) * hs) : 0.0);
        const double cost = sobolev_norm(fe, static_cast<double>(m1 + m2));
        report.cost_ratios.push_back(hm1 > 0.0 ? std::pow(eps, m2) * cost / hm1 : 0.0);
    }

    report.zero_difference = true;
    for (double d : report.diff_l2)
        if (d != 0.0) report.zero_difference = false;

    if (!report.zero_difference) {
        // least-squares slope of log diff against log eps
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const double m = static_cast<double>(eps_list.size());
        for (std::size_t i = 0; i < eps_list.size(); ++i) {
            const double x = std::log(eps_list[i]);
            const double y = std::log(report.diff_l2[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        report.fitted_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    }
    return report;
}

} // namespace oscf
