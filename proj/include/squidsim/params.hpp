#pragma once

#include <cstdint>

namespace squidsim {

/// Junction and loop parameters of a symmetric DC SQUID plus its bias point (SI).
struct SquidParams {
    double critical_current = 0.0;      // I_c [A], per junction
    double junction_resistance = 0.0;   // R_J [Ohm]
    double junction_capacitance = 0.0;  // C_J [F]
    double loop_inductance = 0.0;       // L_J [H]
    double bias_current = 0.0;          // I [A]
    double external_flux = 0.0;         // Phi [Wb]

    bool operator==(const SquidParams&) const = default;
};

/// Open-ended superconducting microstrip and its coupling to the SQUID loop.
struct StriplineParams {
    double inductance_per_length = 0.0;   // l [H/m]
    double capacitance_per_length = 0.0;  // c [F/m]
    double length = 0.0;                  // Lambda [m]
    double fundamental_mutual = 0.0;      // M_1 [H]

    bool operator==(const StriplineParams&) const = default;
};

/// Source, shunt and coupling elements of the input network.
struct InputCircuitParams {
    double source_resistance = 0.0;     // R_i [Ohm]
    double shunt_resistance = 0.0;      // R [Ohm], may be +inf
    double coupling_capacitance = 0.0;  // C_i [F]
    double input_amplitude = 0.0;       // V_i [V]

    bool operator==(const InputCircuitParams&) const = default;
};

/// Integrator and measurement settings. Times are in units of
/// tau_0 = Phi_0 / (2 pi I_c R_J); fluxes are fractions of Phi_0.
struct SimConfig {
    double step = 0.005;
    double transient_skip = 200.0;
    double averaging_window = 2000.0;
    double flux_fd_step = 0.01;
    double ac_amplitude = 0.005;
    std::uint64_t seed = 0;
    // Extra windows, each twice as long, tried when the split-window check fails.
    int max_extensions = 3;
    // Initial condition of every integration.
    double initial_delta1 = 0.0;
    double initial_delta2 = 0.0;
    double initial_ddelta1 = 0.0;
    double initial_ddelta2 = 0.0;

    bool operator==(const SimConfig&) const = default;
};

/// Dimensionless groups of a SquidParams record.
struct DimensionlessSquid {
    double beta_l = 0.0;  // 2 pi L_J I_c / Phi_0
    double beta_c = 0.0;  // 2 pi I_c R_J^2 C_J / Phi_0
    double bias = 0.0;    // I / I_c
    double flux = 0.0;    // Phi / Phi_0

    bool operator==(const DimensionlessSquid&) const = default;
};

/// Units used to convert dimensionless results back to SI.
struct SquidUnits {
    double time = 0.0;     // tau_0 [s]
    double voltage = 0.0;  // I_c R_J [V]
    double current = 0.0;  // I_c [A]
};

void validate(const SquidParams& p);
void validate(const StriplineParams& p);
void validate(const InputCircuitParams& p);
void validate(const SimConfig& c);

double beta_l(const SquidParams& p);
double beta_c(const SquidParams& p);

/// Nondimensionalizes the RCSJ equations; throws InvalidArgument on bad input.
DimensionlessSquid normalize(const SquidParams& p);

/// Inverse of normalize for a fixed (I_c, R_J).
SquidParams denormalize(const DimensionlessSquid& d, double critical_current,
                        double junction_resistance);

SquidUnits units(const SquidParams& p);

} // namespace squidsim
