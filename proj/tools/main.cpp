// oscilloflow: pseudospectral lab for the time-oscillated NS / SQG systems.
//
// Subcommands:
//   simulate            one run from a JSON config; writes trace.csv
//   sweep               run a plan over oscillation frequencies N
//   verify-inequalities ensemble + mollifier campaigns
//   norms               norm table of a stored state
//   report              re-render a sweep summary to JSON/console
//
// Exit status: 0 success, 1 run failure (unhealthy run with --strict, or a
// violated tight inequality), 2 configuration error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscilloflow/checkpoint.hpp"
#include "oscilloflow/config_io.hpp"
#include "oscilloflow/inequalities.hpp"
#include "oscilloflow/operators.hpp"
#include "oscilloflow/random_fields.hpp"
#include "oscilloflow/sweep.hpp"
#include "oscilloflow/trace_io.hpp"

namespace fs = std::filesystem;
using namespace oscf;

namespace {

int cmd_simulate(const std::string& config_path, const std::string& resume_path,
                 const std::string& save_state_path, bool strict_flag) {
    LoadedConfig lc = load_config_file(config_path);
    const bool strict = strict_flag || lc.output.strict;

    RunResult result = [&] {
        if (resume_path.empty()) return run_simulation(lc.sim);
        LoadedCheckpoint ck = load_checkpoint(resume_path);
        if (ck.equation != lc.sim.equation || ck.dim != lc.sim.grid.dim() ||
            ck.points_per_axis != lc.sim.grid.points_per_axis())
            throw ConfigError("checkpoint grid/equation does not match config");
        return run_simulation_from(lc.sim, std::move(ck.state));
    }();

    fs::create_directories(lc.output.dir);
    const std::string trace_path = (fs::path(lc.output.dir) / "trace.csv").string();
    write_trace_csv(result.trace, trace_path);

    if (!save_state_path.empty() && result.final_state.health == Health::ok)
        persist_checkpoint(result.final_state, lc.sim, save_state_path);

    const auto& st = result.final_state;
    std::printf("run finished: t = %.6g, steps = %llu, health = %s\n", st.time,
                static_cast<unsigned long long>(st.step_count), to_string(st.health).c_str());
    std::printf("trace: %s (%zu samples)\n", trace_path.c_str(), result.trace.size());
    if (result.trace.size() >= 2) {
        std::printf("sup_t H2 = %.12g, X_T = %.12g, energy residual = %.3e\n",
                    std::sqrt(result.trace.running_sup_h2_sq().back()),
                    xt_functional(result.trace), energy_balance_report(result.trace));
    }
    if (st.health != Health::ok && strict) return 1;
    return 0;
}

int cmd_sweep(const std::string& config_path, bool strict_flag) {
    SweepPlan plan = load_sweep_file(config_path);
    const bool strict = strict_flag || plan.output.strict;
    SweepResult result = run_sweep_to_dir(plan);
    std::printf("%s", summaries_to_csv(result.summaries).c_str());
    std::printf("wrote %s/summary.csv\n", plan.output.dir.c_str());
    if (strict)
        for (const auto& s : result.summaries)
            if (s.health != Health::ok) return 1;
    return 0;
}

int cmd_verify(const std::string& ids_csv, int count, std::uint64_t seed, int grid_n,
               int grid_n_3d, double alpha, bool skip_mollifier, const std::string& out_dir) {
    std::vector<InequalityId> ids;
    if (ids_csv.empty()) {
        for (const auto& info : all_inequalities())
            if (!info.trajectory) ids.push_back(info.id);
    } else {
        std::stringstream ss(ids_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) ids.push_back(inequality_from_name(tok));
    }

    bool ok = true;
    nlohmann::json out = nlohmann::json::array();
    std::printf("%-14s %6s %12s %12s %6s %s\n", "id", "count", "max_ratio", "mean_ratio", "degen",
                "tight");
    for (InequalityId id : ids) {
        const InequalityInfo& info = inequality_info(id);
        if (info.trajectory)
            throw ConfigError(info.name + " is a trajectory estimate; not an ensemble id");
        const TorusGrid grid(info.dim, info.dim == 2 ? grid_n : grid_n_3d);
        RatioReport r = ensemble_report(id, count, seed, grid, alpha);
        const char* tight = info.tight_constant_one ? (r.tight_ok ? "ok" : "VIOLATED") : "-";
        if (info.tight_constant_one && !r.tight_ok) ok = false;
        std::printf("%-14s %6d %12.6g %12.6g %6d %s\n", info.name.c_str(), r.ensemble_size,
                    r.max_ratio, r.mean_ratio, r.degenerate_count, tight);
        nlohmann::json j;
        j["id"] = info.name;
        j["ensemble_size"] = r.ensemble_size;
        j["max_ratio"] = r.max_ratio;
        j["mean_ratio"] = r.mean_ratio;
        j["degenerate_count"] = r.degenerate_count;
        j["seed"] = r.seed;
        if (info.tight_constant_one) j["tight_ok"] = r.tight_ok;
        out.push_back(j);
    }

    if (!skip_mollifier) {
        const TorusGrid grid(2, grid_n);
        SpectralField f = random_band_limited(grid, 1, 8.0, seed);
        const std::vector<double> eps = {0.2, 0.1, 0.05, 0.025};
        for (double s : {0.5, 1.0}) {
            MollifierReport m = mollifier_checks(f, s, 0, 2, eps);
            std::printf("mollifier s=%.2g: fitted slope %.4g (threshold %.4g)\n", s,
                        m.fitted_slope, s - 0.1);
            if (!(m.fitted_slope >= s - 0.1)) ok = false;
            nlohmann::json j;
            j["mollifier_s"] = s;
            j["fitted_slope"] = m.fitted_slope;
            j["approx_ratios"] = m.approx_ratios;
            j["cost_ratios"] = m.cost_ratios;
            out.push_back(j);
        }
    }

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        std::ofstream js(fs::path(out_dir) / "inequalities.json", std::ios::trunc);
        js << out.dump(2) << "\n";
        std::printf("wrote %s/inequalities.json\n", out_dir.c_str());
    }
    return ok ? 0 : 1;
}

int cmd_norms(const std::string& state_path) {
    LoadedCheckpoint ck = load_checkpoint(state_path);
    const SpectralField& f = ck.state.field;
    std::printf("equation = %s, dim = %d, n = %d, t = %.6g, steps = %llu\n",
                to_string(ck.equation).c_str(), ck.dim, ck.points_per_axis, ck.state.time,
                static_cast<unsigned long long>(ck.state.step_count));
    std::printf("%-12s %.12g\n", "l2", sobolev_norm(f, 0.0));
    std::printf("%-12s %.12g\n", "h1", sobolev_norm(f, 1.0));
    std::printf("%-12s %.12g\n", "h2", sobolev_norm(f, 2.0));
    if (ck.equation == EquationKind::NS) {
        std::printf("%-12s %.12g\n", "h3", sobolev_norm(f, 3.0));
    } else {
        std::printf("%-12s %.12g\n", "h_alpha2", sobolev_norm(f, 0.5 * ck.alpha));
        std::printf("%-12s %.12g\n", "h_top", sobolev_norm(f, 2.0 + 0.5 * ck.alpha));
    }
    std::printf("%-12s %.12g\n", "h2_full", h2_full_norm(f));
    std::printf("%-12s %.12g\n", "grad_linf", grad_sup_norm(f));
    return 0;
}

int cmd_report(const std::string& dir) {
    const fs::path csv_path = fs::path(dir) / "summary.csv";
    std::ifstream in(csv_path);
    if (!in) throw ConfigError("no summary.csv in '" + dir + "'");
    std::string line;
    std::getline(in, line); // header
    nlohmann::json arr = nlohmann::json::array();
    std::printf("%-10s %-15s %-14s %-14s %-14s %-12s %s\n", "n", "health", "sup_h2", "xt",
                "energy_res", "bootstrap", "wall_s");
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string n, health, sup_h2, xt, eres, boot, wall;
        std::getline(ss, n, ',');
        std::getline(ss, health, ',');
        std::getline(ss, sup_h2, ',');
        std::getline(ss, xt, ',');
        std::getline(ss, eres, ',');
        std::getline(ss, boot, ',');
        std::getline(ss, wall, ',');
        std::printf("%-10s %-15s %-14s %-14s %-14s %-12s %s\n", n.c_str(), health.c_str(),
                    sup_h2.c_str(), xt.c_str(), eres.c_str(), boot.c_str(), wall.c_str());
        nlohmann::json j;
        j["n"] = std::stod(n);
        j["health"] = health;
        j["sup_h2"] = std::stod(sup_h2);
        j["xt"] = std::stod(xt);
        j["energy_residual"] = std::stod(eres);
        j["bootstrap_ok"] = boot == "1";
        j["wall_seconds"] = std::stod(wall);
        arr.push_back(j);
    }
    std::ofstream js(fs::path(dir) / "summary.json", std::ios::trunc);
    js << arr.dump(2) << "\n";
    std::printf("wrote %s/summary.json\n", dir.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"oscilloflow: time-oscillated NS/SQG pseudospectral lab"};
    app.require_subcommand(1);

    std::string config_path, resume_path, save_state_path, state_path, dir, ids_csv, out_dir;
    bool strict = false, skip_mollifier = false;
    int count = 200, grid_n = 64, grid_n_3d = 32;
    std::uint64_t seed = 1;
    double alpha = 0.5;

    auto* sim = app.add_subcommand("simulate", "run one configuration");
    sim->add_option("--config", config_path, "JSON config file")->required();
    sim->add_option("--resume", resume_path, "resume from a checkpoint");
    sim->add_option("--save-state", save_state_path, "write final state checkpoint");
    sim->add_flag("--strict", strict, "exit 1 on unhealthy run");

    auto* sw = app.add_subcommand("sweep", "run an N-sweep plan");
    sw->add_option("--config", config_path, "JSON sweep plan")->required();
    sw->add_flag("--strict", strict, "exit 1 if any run is unhealthy");

    auto* ver = app.add_subcommand("verify-inequalities", "ensemble + mollifier campaigns");
    ver->add_option("--ids", ids_csv, "comma-separated inequality ids (default: all pointwise)");
    ver->add_option("--count", count, "ensemble size")->check(CLI::PositiveNumber);
    ver->add_option("--seed", seed, "base seed");
    ver->add_option("--grid-n", grid_n, "2D grid resolution");
    ver->add_option("--grid-n-3d", grid_n_3d, "3D grid resolution");
    ver->add_option("--alpha", alpha, "SQG dissipation exponent");
    ver->add_flag("--no-mollifier", skip_mollifier, "skip the mollifier campaign");
    ver->add_option("--out", out_dir, "directory for the JSON report");

    auto* nr = app.add_subcommand("norms", "print the norm table of a stored state");
    nr->add_option("--state", state_path, "checkpoint file")->required();

    auto* rp = app.add_subcommand("report", "render a sweep summary to JSON/console");
    rp->add_option("--dir", dir, "sweep output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(config_path, resume_path, save_state_path, strict);
        if (sw->parsed()) return cmd_sweep(config_path, strict);
        if (ver->parsed())
            return cmd_verify(ids_csv, count, seed, grid_n, grid_n_3d, alpha, skip_mollifier,
                              out_dir);
        if (nr->parsed()) return cmd_norms(state_path);
        if (rp->parsed()) return cmd_report(dir);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const CheckpointError& e) {
        std::fprintf(stderr, "checkpoint error: %s\n", e.what());
        return 2;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
