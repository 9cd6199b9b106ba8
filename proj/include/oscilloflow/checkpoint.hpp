#pragma once

#include <string>

#include "oscilloflow/dynamics.hpp"

namespace oscf {

/// Binary state file, magic "OSCF1": equation kind, dim, n, alpha, N, time,
/// step count, then little-endian f64 (re, im) pairs per coefficient in
/// component-major, row-major k order.
void persist_checkpoint(const SimulationState& state, const SimulationConfig& cfg,
                        const std::string& path);

struct LoadedCheckpoint {
    SimulationState state;
    EquationKind equation;
    int dim = 0;
    int points_per_axis = 0;
    double alpha = 0.0;
    double n_multiplier = 0.0;
};

/// Throws CheckpointError (naming the byte offset) on magic mismatch or
/// truncation; no partial state is returned.
LoadedCheckpoint load_checkpoint(const std::string& path);

} // namespace oscf
