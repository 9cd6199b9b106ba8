#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oscilloflow/dynamics.hpp"

namespace oscf {

struct OutputOptions {
    std::string dir = ".";
    bool strict = false;
};

struct LoadedConfig {
    SimulationConfig sim;
    OutputOptions output;
};

/// Parse a simulation config JSON document. Unknown keys are configuration
/// errors; diagnostics name the offending key. Schema:
/// {equation, alpha, grid_n, oscillation{kind, N[, table]},
///  time{t_end, cfl, osc_fraction, dt_max, diagnostic_interval},
///  initial_data{generator, target_h2, seed}, output{dir, strict}}
LoadedConfig parse_config(const std::string& json_text);
LoadedConfig load_config_file(const std::string& path);

struct SweepPlan {
    SimulationConfig base;
    OutputOptions output;
    std::vector<double> n_values; // strictly increasing, >= 0
    int parallelism = 1;
};

/// Parse a sweep plan: {base: <config object>, n_values: [..], parallelism}.
SweepPlan parse_sweep(const std::string& json_text);
SweepPlan load_sweep_file(const std::string& path);

/// Canonical digest of a config (FNV-1a over the canonical JSON dump).
std::uint64_t config_digest(const SimulationConfig& cfg);

/// FNV-1a digest of a field's coefficient bytes.
std::uint64_t field_digest(const SpectralField& f);

} // namespace oscf
