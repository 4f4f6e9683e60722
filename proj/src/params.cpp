#include "squidsim/params.hpp"

#include "squidsim/constants.hpp"
#include "squidsim/errors.hpp"

#include <cmath>
#include <sstream>

namespace squidsim {
namespace {

void require(bool ok, const char* key, const char* invariant, double value) {
    if (ok) return;
    std::ostringstream os;
    os.precision(17);
    os << key << " = " << value << " violates " << invariant;
    throw InvalidArgument(os.str());
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

void validate(const SquidParams& p) {
    require(finite(p.critical_current) && p.critical_current > 0, "critical_current", "I_c > 0",
            p.critical_current);
    require(finite(p.junction_resistance) && p.junction_resistance > 0, "junction_resistance",
            "R_J > 0", p.junction_resistance);
    require(finite(p.junction_capacitance) && p.junction_capacitance >= 0, "junction_capacitance",
            "C_J ≥ 0", p.junction_capacitance);
    require(finite(p.loop_inductance) && p.loop_inductance > 0, "loop_inductance", "L_J > 0",
            p.loop_inductance);
    require(finite(p.bias_current), "bias_current", "I finite", p.bias_current);
    require(finite(p.external_flux), "external_flux", "Phi finite", p.external_flux);
}

void validate(const StriplineParams& p) {
    require(finite(p.inductance_per_length) && p.inductance_per_length > 0,
            "inductance_per_length", "l > 0", p.inductance_per_length);
    require(finite(p.capacitance_per_length) && p.capacitance_per_length > 0,
            "capacitance_per_length", "c > 0", p.capacitance_per_length);
    require(finite(p.length) && p.length > 0, "length", "Lambda > 0", p.length);
    require(finite(p.fundamental_mutual) && p.fundamental_mutual >= 0, "fundamental_mutual",
            "M_1 ≥ 0", p.fundamental_mutual);
}

void validate(const InputCircuitParams& p) {
    require(finite(p.source_resistance) && p.source_resistance >= 0, "source_resistance",
            "R_i ≥ 0", p.source_resistance);
    // R = +inf is the open-shunt limit (1/R = 0).
    require(!std::isnan(p.shunt_resistance) && p.shunt_resistance > 0, "shunt_resistance",
            "R > 0", p.shunt_resistance);
    require(finite(p.coupling_capacitance) && p.coupling_capacitance > 0, "coupling_capacitance",
            "C_i > 0", p.coupling_capacitance);
    require(finite(p.input_amplitude) && p.input_amplitude >= 0, "input_amplitude", "V_i ≥ 0",
            p.input_amplitude);
}

void validate(const SimConfig& c) {
    require(finite(c.step) && c.step > 0, "step", "step > 0", c.step);
    require(finite(c.transient_skip) && c.transient_skip >= 0, "transient_skip",
            "transient_skip ≥ 0", c.transient_skip);
    require(finite(c.averaging_window) && c.averaging_window >= 100.0 * c.step,
            "averaging_window", "averaging_window ≥ 100·step", c.averaging_window);
    require(finite(c.flux_fd_step) && c.flux_fd_step > 0 && c.flux_fd_step <= 0.05,
            "flux_fd_step", "0 < flux_fd_step ≤ 0.05", c.flux_fd_step);
    require(finite(c.ac_amplitude) && c.ac_amplitude > 0 && c.ac_amplitude <= 0.01,
            "ac_amplitude", "0 < ac_amplitude ≤ 0.01", c.ac_amplitude);
    require(c.max_extensions >= 0, "max_extensions", "max_extensions ≥ 0", c.max_extensions);
    require(finite(c.initial_delta1) && finite(c.initial_delta2) && finite(c.initial_ddelta1) &&
                finite(c.initial_ddelta2),
            "initial_state", "finite initial state", c.initial_delta1);
}

double beta_l(const SquidParams& p) {
    return two_pi * p.loop_inductance * p.critical_current / constants::flux_quantum;
}

double beta_c(const SquidParams& p) {
    return two_pi * p.critical_current * p.junction_resistance * p.junction_resistance *
           p.junction_capacitance / constants::flux_quantum;
}

DimensionlessSquid normalize(const SquidParams& p) {
    validate(p);
    return {beta_l(p), beta_c(p), p.bias_current / p.critical_current,
            p.external_flux / constants::flux_quantum};
}

SquidParams denormalize(const DimensionlessSquid& d, double critical_current,
                        double junction_resistance) {
    SquidParams p;
    p.critical_current = critical_current;
    p.junction_resistance = junction_resistance;
    p.loop_inductance = d.beta_l * constants::flux_quantum / (two_pi * critical_current);
    p.junction_capacitance = d.beta_c * constants::flux_quantum /
                             (two_pi * critical_current * junction_resistance * junction_resistance);
    p.bias_current = d.bias * critical_current;
    p.external_flux = d.flux * constants::flux_quantum;
    validate(p);
    return p;
}

SquidUnits units(const SquidParams& p) {
    return {constants::flux_quantum / (two_pi * p.critical_current * p.junction_resistance),
            p.critical_current * p.junction_resistance, p.critical_current};
}

} // namespace squidsim
