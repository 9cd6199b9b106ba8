#pragma once

#include <string>

#include "oscilloflow/norms.hpp"

namespace oscf {

/// Write the trace CSV. Columns, in order:
///   time, l2, h_alpha2 (SQG) or h1 (NS), h1, h2, h_top, grad_linf,
///   xt_running, energy_residual_running
std::string trace_to_csv(const NormTrace& trace);
void write_trace_csv(const NormTrace& trace, const std::string& path);

} // namespace oscf
