#pragma once

#include "squidsim/constants.hpp"
#include "squidsim/params.hpp"

namespace squidsim {

/// Junction phases (unwrapped) and their rates in dimensionless time.
struct SquidState {
    double delta1 = 0.0;
    double delta2 = 0.0;
    double ddelta1 = 0.0;
    double ddelta2 = 0.0;
};

struct StateDerivative {
    double d_delta1 = 0.0;
    double d_delta2 = 0.0;
    double dd_delta1 = 0.0;
    double dd_delta2 = 0.0;
};

/// Mean voltage, circulating current and Josephson frequency of the bare SQUID (SI).
struct OperatingPoint {
    double mean_voltage = 0.0;         // V
    double circulating_current = 0.0;  // A
    double josephson_frequency = 0.0;  // rad/s, 2 pi |V| / Phi_0
    bool converged = false;
};

/// Static flux derivatives of the bare SQUID at its bias point.
struct TransferFunctions {
    double v_phi = 0.0;  // dV/dPhi [V/Wb]
    double j_phi = 0.0;  // dJ/dPhi [A/Wb]
    OperatingPoint operating_point;
};

/// Window statistics in dimensionless units (voltage I_c R_J, current I_c).
struct SteadyState {
    double voltage = 0.0;
    double current = 0.0;
    double first_half_voltage = 0.0;
    double second_half_voltage = 0.0;
    double phase_advance = 0.0;  // change of (delta1 + delta2)/2 over the window
    double window = 0.0;         // length of the last averaging window
    bool zero_voltage = false;
    bool converged = false;
};

/// j = (delta1 - delta2 - 2 pi phi_e) / beta_L.
double circulating_current(const SquidState& s, const DimensionlessSquid& d);

/// Right-hand side of the reduced two-junction equations:
///   beta_c delta_1'' + delta_1' = i/2 - j - sin delta_1
///   beta_c delta_2'' + delta_2' = i/2 + j - sin delta_2
/// For beta_c = 0 the first-order form is used and the second-derivative slots are zero.
StateDerivative derivatives(const SquidState& s, const DimensionlessSquid& d);

/// Dimensionless voltage (delta_1' + delta_2') / 2.
double voltage(const SquidState& s, const DimensionlessSquid& d);

/// One classical RK4 step of size h. With beta_c = 0 the rate slots are refreshed
/// from the first-order equations after the step.
SquidState rk4_step(const SquidState& s, const DimensionlessSquid& d, double h);

SquidState initial_state(const SimConfig& cfg);

/// Largest step for which RK4 stays stable on the stiff phase-difference mode.
double max_stable_step(const DimensionlessSquid& d);

/// Integrates past the transient and averages v and j; doubles the window up to
/// cfg.max_extensions times until the two half-window voltages agree within 1e-3.
SteadyState steady_state(const DimensionlessSquid& d, const SimConfig& cfg);

OperatingPoint run_to_steady(const SquidParams& p, const SimConfig& cfg);

/// Central differences of V and J in external flux with step flux_fd_step * Phi_0.
TransferFunctions transfer_functions(const SquidParams& p, const SimConfig& cfg);

/// Complex voltage response per unit flux [V/Wb] to Phi(t) = Phi + A cos(omega t),
/// extracted by a Hann-windowed lock-in over an integer number of drive periods.
Complex ac_response(const SquidParams& p, const SimConfig& cfg, double omega);

} // namespace squidsim
