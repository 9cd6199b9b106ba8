#pragma once

#include <string>
#include <vector>

#include "oscilloflow/config_io.hpp"

namespace oscf {

/// One row of the sweep summary. Present for every launched run, including
/// unhealthy ones.
struct RunSummary {
    double n = 0.0;
    std::uint64_t config_digest = 0;
    std::uint64_t data_digest = 0;
    Health health = Health::ok;
    double sup_h2 = 0.0;
    double xt = 0.0;
    double energy_residual = 0.0;
    bool bootstrap_ok = true; // at C = 1
    double wall_seconds = 0.0;
};

struct SweepResult {
    std::vector<RunSummary> summaries; // sorted by n
    std::vector<NormTrace> traces;     // same order
};

/// Execute the sweep: every run shares bit-identical initial data generated
/// once from the base config. Runs are independent; up to `parallelism`
/// execute concurrently (capped by OSCILLOFLOW_THREADS when set).
SweepResult run_sweep(const SweepPlan& plan);

/// Summary CSV: n, health, sup_h2, xt, energy_residual, bootstrap_ok,
/// wall_seconds.
std::string summaries_to_csv(const std::vector<RunSummary>& rows);

/// Summary rows as a JSON array (includes the digests).
std::string summaries_to_json(const std::vector<RunSummary>& rows);

/// Run the sweep and write <dir>/summary.csv plus one trace CSV per run at
/// <dir>/run_n<value>.csv.
SweepResult run_sweep_to_dir(const SweepPlan& plan);

/// Effective worker count: min(requested, OSCILLOFLOW_THREADS when set).
int effective_parallelism(int requested);

} // namespace oscf
