#include "oscilloflow/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "oscilloflow/errors.hpp"

namespace oscf {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string trace_to_csv(const NormTrace& trace) {
    std::ostringstream os;
    const bool sqg = trace.equation() == EquationKind::SQG;
    os << "time,l2," << (sqg ? "h_alpha2" : "h1")
       << ",h1,h2,h_top,grad_linf,xt_running,energy_residual_running\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const NormSample& s = trace.samples()[i];
        os << fmt(trace.times()[i]) << ',' << fmt(s.l2) << ',' << fmt(s.h_diss) << ','
           << fmt(s.h1) << ',' << fmt(s.h2) << ',' << fmt(s.h_top) << ',' << fmt(s.grad_linf)
           << ',' << fmt(trace.xt_prefix(i)) << ',' << fmt(trace.energy_residual_prefix(i))
           << '\n';
    }
    return os.str();
}

void write_trace_csv(const NormTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << trace_to_csv(trace);
    if (!out) throw ConfigError("write failed for '" + path + "'");
}

} // namespace oscf
