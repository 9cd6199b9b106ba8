#include "oscilloflow/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace oscf {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

template <class T>
T get_required(const json& obj, const std::string& where, const std::string& key) {
    if (!obj.contains(key)) throw ConfigError("missing key '" + key + "' in " + where);
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("bad value for key '" + key + "' in " + where);
    }
}

template <class T>
T get_optional(const json& obj, const std::string& where, const std::string& key, T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("bad value for key '" + key + "' in " + where);
    }
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
}

SimulationConfig parse_sim(const json& doc, OutputOptions& output) {
    require_keys(doc, "config",
                 {"equation", "alpha", "grid_n", "oscillation", "time", "initial_data",
                  "output"});

    SimulationConfig cfg;
    const std::string eq = get_required<std::string>(doc, "config", "equation");
    if (eq == "NS")
        cfg.equation = EquationKind::NS;
    else if (eq == "SQG")
        cfg.equation = EquationKind::SQG;
    else
        throw ConfigError("key 'equation' must be \"NS\" or \"SQG\", got \"" + eq + "\"");

    if (cfg.equation == EquationKind::SQG) {
        cfg.alpha = get_required<double>(doc, "config", "alpha");
    } else if (doc.contains("alpha")) {
        throw ConfigError("key 'alpha' applies to SQG only");
    }

    const int n = get_required<int>(doc, "config", "grid_n");
    const int dim = cfg.equation == EquationKind::SQG ? 2 : 3;
    cfg.grid = TorusGrid(dim, n);

    const json& osc = doc.contains("oscillation") ? doc.at("oscillation")
                                                  : throw ConfigError("missing key 'oscillation'");
    require_keys(osc, "oscillation", {"kind", "N", "table"});
    cfg.profile.kind =
        oscillation_kind_from_string(get_required<std::string>(osc, "oscillation", "kind"));
    cfg.profile.n_multiplier = get_required<double>(osc, "oscillation", "N");
    if (cfg.profile.kind == OscillationKind::tabulated) {
        if (!osc.contains("table")) throw ConfigError("tabulated oscillation requires 'table'");
        for (const auto& row : osc.at("table")) {
            if (!row.is_array() || row.size() != 2)
                throw ConfigError("oscillation 'table' rows must be [t, value] pairs");
            cfg.profile.table.emplace_back(row.at(0).get<double>(), row.at(1).get<double>());
        }
    } else if (osc.contains("table")) {
        throw ConfigError("key 'table' applies to the tabulated oscillation kind only");
    }

    const json& tm = doc.contains("time") ? doc.at("time")
                                          : throw ConfigError("missing key 'time'");
    require_keys(tm, "time", {"t_end", "cfl", "osc_fraction", "dt_max", "diagnostic_interval"});
    cfg.t_end = get_required<double>(tm, "time", "t_end");
    cfg.cfl = get_optional<double>(tm, "time", "cfl", 0.5);
    cfg.osc_fraction = get_optional<double>(tm, "time", "osc_fraction", 1.0 / 16.0);
    cfg.dt_max = get_required<double>(tm, "time", "dt_max");
    cfg.diagnostic_interval = get_required<double>(tm, "time", "diagnostic_interval");

    const json& init = doc.contains("initial_data")
                           ? doc.at("initial_data")
                           : throw ConfigError("missing key 'initial_data'");
    require_keys(init, "initial_data", {"generator", "target_h2", "seed"});
    cfg.initial_data.generator = get_required<std::string>(init, "initial_data", "generator");
    cfg.initial_data.target_h2 = get_required<double>(init, "initial_data", "target_h2");
    cfg.initial_data.seed = get_optional<std::uint64_t>(init, "initial_data", "seed", 0);

    if (doc.contains("output")) {
        const json& out = doc.at("output");
        require_keys(out, "output", {"dir", "strict"});
        output.dir = get_optional<std::string>(out, "output", "dir", ".");
        output.strict = get_optional<bool>(out, "output", "strict", false);
    }

    cfg.validate();
    return cfg;
}

} // namespace

LoadedConfig parse_config(const std::string& json_text) {
    const json doc = parse_text(json_text);
    LoadedConfig lc;
    lc.sim = parse_sim(doc, lc.output);
    return lc;
}

LoadedConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

SweepPlan parse_sweep(const std::string& json_text) {
    const json doc = parse_text(json_text);
    require_keys(doc, "sweep plan", {"base", "n_values", "parallelism"});
    if (!doc.contains("base")) throw ConfigError("missing key 'base' in sweep plan");

    SweepPlan plan;
    plan.base = parse_sim(doc.at("base"), plan.output);

    if (!doc.contains("n_values")) throw ConfigError("missing key 'n_values' in sweep plan");
    for (const auto& v : doc.at("n_values")) plan.n_values.push_back(v.get<double>());
    if (plan.n_values.empty()) throw ConfigError("'n_values' must be non-empty");
    for (std::size_t i = 0; i < plan.n_values.size(); ++i) {
        if (plan.n_values[i] < 0.0) throw ConfigError("'n_values' must be >= 0");
        if (i > 0 && plan.n_values[i] <= plan.n_values[i - 1])
            throw ConfigError("'n_values' must be strictly increasing");
    }
    plan.parallelism = get_optional<int>(doc, "sweep plan", "parallelism", 1);
    if (plan.parallelism < 1) throw ConfigError("'parallelism' must be >= 1");
    return plan;
}

SweepPlan load_sweep_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open sweep file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sweep(ss.str());
}

namespace {

std::uint64_t fnv1a(const void* data, std::size_t bytes, std::uint64_t h = 14695981039346656037ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < bytes; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::uint64_t config_digest(const SimulationConfig& cfg) {
    json j;
    j["equation"] = to_string(cfg.equation);
    j["alpha"] = cfg.alpha;
    j["grid_n"] = cfg.grid.points_per_axis();
    j["grid_dim"] = cfg.grid.dim();
    j["oscillation"] = {{"kind", to_string(cfg.profile.kind)}, {"N", cfg.profile.n_multiplier}};
    j["time"] = {{"t_end", cfg.t_end},
                 {"cfl", cfg.cfl},
                 {"osc_fraction", cfg.osc_fraction},
                 {"dt_max", cfg.dt_max},
                 {"diagnostic_interval", cfg.diagnostic_interval}};
    j["initial_data"] = {{"generator", cfg.initial_data.generator},
                         {"target_h2", cfg.initial_data.target_h2},
                         {"seed", cfg.initial_data.seed}};
    j["tail_threshold"] = cfg.tail_threshold;
    const std::string dump = j.dump();
    return fnv1a(dump.data(), dump.size());
}

std::uint64_t field_digest(const SpectralField& f) {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& z : f.raw()) {
        const double re = z.real(), im = z.imag();
        h = fnv1a(&re, sizeof re, h);
        h = fnv1a(&im, sizeof im, h);
    }
    return h;
}

} // namespace oscf
