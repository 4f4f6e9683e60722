#pragma once

#include "squidsim/params.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace squidsim {

enum class Spacing { linear, log };

/// Frequency grid for the impedance and gain sweeps [rad/s].
struct SweepSpec {
    double start = 0.0;
    double stop = 0.0;
    int points = 201;
    Spacing spacing = Spacing::linear;

    bool operator==(const SweepSpec&) const = default;
};

struct RunConfig {
    SquidParams squid;
    StriplineParams line;
    InputCircuitParams input;
    SimConfig sim;
    SweepSpec sweep;

    bool operator==(const RunConfig&) const = default;
};

/// Parses a flat `key = value` document (SI units, `#` comments) and validates every
/// invariant. Throws ConfigError naming the offending key.
///
/// Required keys: critical_current, junction_resistance, loop_inductance,
/// inductance_per_length, capacitance_per_length, length, fundamental_mutual,
/// shunt_resistance, coupling_capacitance. Everything else has a default; see
/// config_keys(). sweep_start / sweep_stop default to 0.5 and 1.5 omega_1.
RunConfig parse_config(std::string_view text);

/// Writes every key in canonical order with 17 significant digits.
std::string emit_config(const RunConfig& cfg);

std::vector<std::string> config_keys();

/// Sweep frequencies, ascending, endpoints exact.
std::vector<double> sweep_frequencies(const SweepSpec& sweep);

} // namespace squidsim
