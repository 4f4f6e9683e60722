#include "squidsim/config.hpp"

#include "squidsim/errors.hpp"
#include "squidsim/transmission_line.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace squidsim {
namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const auto a = s.find_first_not_of(ws);
    if (a == std::string_view::npos) return {};
    const auto b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
}

double parse_double(std::string_view key, std::string_view raw) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc{} || ptr != raw.data() + raw.size())
        throw ConfigError(std::string(key) + ": '" + std::string(raw) + "' is not a number");
    return value;
}

template <class Int>
Int parse_int(std::string_view key, std::string_view raw) {
    Int value{};
    auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc{} || ptr != raw.data() + raw.size())
        throw ConfigError(std::string(key) + ": '" + std::string(raw) + "' is not an integer");
    return value;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Field {
    const char* key;
    bool required;
    std::function<void(RunConfig&, std::string_view)> set;
    std::function<std::string(const RunConfig&)> get;
};

#define SQUIDSIM_DOUBLE(name, member, required)                                                \
    Field {                                                                                    \
        name, required,                                                                        \
            [](RunConfig& c, std::string_view v) { c.member = parse_double(name, v); },       \
            [](const RunConfig& c) { return format_double(c.member); }                         \
    }

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        SQUIDSIM_DOUBLE("critical_current", squid.critical_current, true),
        SQUIDSIM_DOUBLE("junction_resistance", squid.junction_resistance, true),
        SQUIDSIM_DOUBLE("junction_capacitance", squid.junction_capacitance, false),
        SQUIDSIM_DOUBLE("loop_inductance", squid.loop_inductance, true),
        SQUIDSIM_DOUBLE("bias_current", squid.bias_current, false),
        SQUIDSIM_DOUBLE("external_flux", squid.external_flux, false),
        SQUIDSIM_DOUBLE("inductance_per_length", line.inductance_per_length, true),
        SQUIDSIM_DOUBLE("capacitance_per_length", line.capacitance_per_length, true),
        SQUIDSIM_DOUBLE("length", line.length, true),
        SQUIDSIM_DOUBLE("fundamental_mutual", line.fundamental_mutual, true),
        SQUIDSIM_DOUBLE("source_resistance", input.source_resistance, false),
        SQUIDSIM_DOUBLE("shunt_resistance", input.shunt_resistance, true),
        SQUIDSIM_DOUBLE("coupling_capacitance", input.coupling_capacitance, true),
        SQUIDSIM_DOUBLE("input_amplitude", input.input_amplitude, false),
        SQUIDSIM_DOUBLE("step", sim.step, false),
        SQUIDSIM_DOUBLE("transient_skip", sim.transient_skip, false),
        SQUIDSIM_DOUBLE("averaging_window", sim.averaging_window, false),
        SQUIDSIM_DOUBLE("flux_fd_step", sim.flux_fd_step, false),
        SQUIDSIM_DOUBLE("ac_amplitude", sim.ac_amplitude, false),
        Field{"seed", false,
              [](RunConfig& c, std::string_view v) {
                  c.sim.seed = parse_int<std::uint64_t>("seed", v);
              },
              [](const RunConfig& c) { return std::to_string(c.sim.seed); }},
        Field{"max_extensions", false,
              [](RunConfig& c, std::string_view v) {
                  c.sim.max_extensions = parse_int<int>("max_extensions", v);
              },
              [](const RunConfig& c) { return std::to_string(c.sim.max_extensions); }},
        SQUIDSIM_DOUBLE("initial_delta1", sim.initial_delta1, false),
        SQUIDSIM_DOUBLE("initial_delta2", sim.initial_delta2, false),
        SQUIDSIM_DOUBLE("initial_ddelta1", sim.initial_ddelta1, false),
        SQUIDSIM_DOUBLE("initial_ddelta2", sim.initial_ddelta2, false),
        SQUIDSIM_DOUBLE("sweep_start", sweep.start, false),
        SQUIDSIM_DOUBLE("sweep_stop", sweep.stop, false),
        Field{"sweep_points", false,
              [](RunConfig& c, std::string_view v) {
                  c.sweep.points = parse_int<int>("sweep_points", v);
              },
              [](const RunConfig& c) { return std::to_string(c.sweep.points); }},
        Field{"sweep_spacing", false,
              [](RunConfig& c, std::string_view v) {
                  if (v == "linear")
                      c.sweep.spacing = Spacing::linear;
                  else if (v == "log")
                      c.sweep.spacing = Spacing::log;
                  else
                      throw ConfigError("sweep_spacing: expected 'linear' or 'log', got '" +
                                        std::string(v) + "'");
              },
              [](const RunConfig& c) {
                  return std::string(c.sweep.spacing == Spacing::log ? "log" : "linear");
              }},
    };
    return table;
}

#undef SQUIDSIM_DOUBLE

} // namespace

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& f : fields()) keys.emplace_back(f.key);
    return keys;
}

RunConfig parse_config(std::string_view text) {
    std::map<std::string, std::string, std::less<>> values;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view body(line);
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        body = trim(body);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key(trim(body.substr(0, eq)));
        const std::string value(trim(body.substr(eq + 1)));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        if (!values.emplace(key, value).second) throw ConfigError("duplicate key '" + key + "'");
    }

    RunConfig cfg;
    for (const auto& [key, _] : values) {
        bool known = false;
        for (const auto& f : fields()) known = known || key == f.key;
        if (!known) throw ConfigError("unknown key '" + key + "'");
    }
    for (const auto& f : fields()) {
        auto it = values.find(f.key);
        if (it == values.end()) {
            if (f.required) throw ConfigError(std::string("missing required key '") + f.key + "'");
            continue;
        }
        f.set(cfg, it->second);
    }

    try {
        validate(cfg.squid);
        validate(cfg.line);
        validate(cfg.input);
        validate(cfg.sim);
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }

    const double w1 = fundamental_frequency(cfg.line);
    if (!values.contains("sweep_start")) cfg.sweep.start = 0.5 * w1;
    if (!values.contains("sweep_stop")) cfg.sweep.stop = 1.5 * w1;
    if (!(std::isfinite(cfg.sweep.start) && cfg.sweep.start > 0))
        throw ConfigError("sweep_start = " + format_double(cfg.sweep.start) +
                          " violates sweep_start > 0");
    if (!(std::isfinite(cfg.sweep.stop) && cfg.sweep.start < cfg.sweep.stop))
        throw ConfigError("sweep_stop = " + format_double(cfg.sweep.stop) +
                          " violates start < stop");
    if (cfg.sweep.points < 2)
        throw ConfigError("sweep_points = " + std::to_string(cfg.sweep.points) +
                          " violates points ≥ 2");
    return cfg;
}

std::string emit_config(const RunConfig& cfg) {
    std::string out;
    for (const auto& f : fields()) {
        out += f.key;
        out += " = ";
        out += f.get(cfg);
        out += '\n';
    }
    return out;
}

std::vector<double> sweep_frequencies(const SweepSpec& sweep) {
    std::vector<double> w(static_cast<std::size_t>(sweep.points));
    const double last = static_cast<double>(sweep.points - 1);
    for (int k = 0; k < sweep.points; ++k) {
        const double f = k / last;
        if (sweep.spacing == Spacing::log)
            w[k] = sweep.start * std::pow(sweep.stop / sweep.start, f);
        else
            w[k] = sweep.start + f * (sweep.stop - sweep.start);
    }
    w.front() = sweep.start;
    w.back() = sweep.stop;
    return w;
}

} // namespace squidsim
