#include "oscilloflow/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "oscilloflow/operators.hpp"
#include "oscilloflow/trace_io.hpp"

namespace oscf {

int effective_parallelism(int requested) {
    int limit = requested;
    if (const char* env = std::getenv("OSCILLOFLOW_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) limit = std::min(limit, cap);
    }
    return std::max(1, limit);
}

SweepResult run_sweep(const SweepPlan& plan) {
    plan.base.validate();
    if (plan.n_values.empty()) throw ConfigError("sweep: n_values must be non-empty");

    // Shared initial data: generated once, reused bit-identically.
    SpectralField data = make_initial_data(plan.base.initial_data, plan.base.grid,
                                           plan.base.equation);
    dealias_in_place(data);
    const std::uint64_t data_dig = field_digest(data);
    const double h2_init = h2_full_norm(data);

    const std::size_t runs = plan.n_values.size();
    std::vector<RunSummary> summaries(runs);
    std::vector<NormTrace> traces(runs, NormTrace(plan.base.equation, plan.base.alpha));

    auto execute = [&](std::size_t i) {
        SimulationConfig cfg = plan.base;
        cfg.profile.n_multiplier = plan.n_values[i];
        const auto t0 = std::chrono::steady_clock::now();
        RunResult res = run_simulation_from(cfg, SimulationState(data));
        const auto t1 = std::chrono::steady_clock::now();

        RunSummary& s = summaries[i];
        s.n = plan.n_values[i];
        s.config_digest = config_digest(cfg);
        s.data_digest = data_dig;
        s.health = res.final_state.health;
        s.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
        if (!res.trace.empty()) {
            s.sup_h2 = std::sqrt(res.trace.running_sup_h2_sq().back());
            s.xt = xt_functional(res.trace);
            s.energy_residual =
                res.trace.size() >= 2 ? res.trace.energy_residual_prefix(res.trace.size() - 1)
                                      : 0.0;
            s.bootstrap_ok = bootstrap_monitor(res.trace, 1.0, h2_init).held;
        }
        traces[i] = std::move(res.trace);
    };

    const int workers = effective_parallelism(plan.parallelism);
    if (workers == 1 || runs == 1) {
        for (std::size_t i = 0; i < runs; ++i) execute(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int count = std::min<std::size_t>(static_cast<std::size_t>(workers), runs);
        for (int w = 0; w < count; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < runs; i = next.fetch_add(1))
                    execute(i);
            });
        for (auto& th : pool) th.join();
    }
    return {std::move(summaries), std::move(traces)};
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string summaries_to_csv(const std::vector<RunSummary>& rows) {
    std::ostringstream os;
    os << "n,health,sup_h2,xt,energy_residual,bootstrap_ok,wall_seconds\n";
    for (const auto& r : rows)
        os << fmt(r.n) << ',' << to_string(r.health) << ',' << fmt(r.sup_h2) << ',' << fmt(r.xt)
           << ',' << fmt(r.energy_residual) << ',' << (r.bootstrap_ok ? 1 : 0) << ','
           << fmt(r.wall_seconds) << '\n';
    return os.str();
}

std::string summaries_to_json(const std::vector<RunSummary>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["n"] = r.n;
        j["config_digest"] = r.config_digest;
        j["data_digest"] = r.data_digest;
        j["health"] = to_string(r.health);
        j["sup_h2"] = r.sup_h2;
        j["xt"] = r.xt;
        j["energy_residual"] = r.energy_residual;
        j["bootstrap_ok"] = r.bootstrap_ok;
        j["wall_seconds"] = r.wall_seconds;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

SweepResult run_sweep_to_dir(const SweepPlan& plan) {
    namespace fs = std::filesystem;
    fs::create_directories(plan.output.dir);
    SweepResult result = run_sweep(plan);

    std::ofstream csv(fs::path(plan.output.dir) / "summary.csv", std::ios::trunc);
    if (!csv) throw ConfigError("cannot write summary.csv in '" + plan.output.dir + "'");
    csv << summaries_to_csv(result.summaries);

    std::ofstream js(fs::path(plan.output.dir) / "summary.json", std::ios::trunc);
    js << summaries_to_json(result.summaries);

    for (std::size_t i = 0; i < result.summaries.size(); ++i) {
        std::ostringstream name;
        name << "run_n" << result.summaries[i].n << ".csv";
        write_trace_csv(result.traces[i], (fs::path(plan.output.dir) / name.str()).string());
    }
    return result;
}

} // namespace oscf
