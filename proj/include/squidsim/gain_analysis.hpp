#pragma once

#include "squidsim/constants.hpp"
#include "squidsim/params.hpp"
#include "squidsim/squid_dynamics.hpp"

#include <span>
#include <vector>

namespace squidsim {

/// One frequency sample of the small-signal amplifier response.
struct GainPoint {
    double frequency = 0.0;       // rad/s
    Complex z;                    // forward impedance [Ohm]
    Complex z_loaded;             // with SQUID back-action [Ohm]
    Complex gain;                 // V / V_i
    Complex delta_flux_per_volt;  // M_1 / z_loaded [Wb/V]
    double screening_ratio = 0.0; // (omega_1 / omega_J)^2, NaN at zero voltage
    bool warn = false;            // outside the lumped-model window
};

/// V / V_i = M_1 V_Phi / (Z + i omega M_1^2 (C_1 / C_i) J_Phi) using bare-SQUID
/// transfer functions. Throws SingularGainError when |z_loaded| < 1e-12 Ohm.
GainPoint gain_at(const TransferFunctions& tf, const StriplineParams& line,
                  const InputCircuitParams& ic, double omega);

/// Suppression of the high-frequency coupling, M^2(omega_J) / M_1^2 = (omega_1/omega_J)^2,
/// clamped to 1 when omega_J < omega_1. Throws ZeroVoltageError when omega_J = 0.
double screening_ratio(const OperatingPoint& op, const StriplineParams& line);

/// One transfer-function extraction at the bias point, then the gain at each frequency.
/// Frequencies must be positive and ascending.
std::vector<GainPoint> gain_sweep(const SquidParams& p, const StriplineParams& line,
                                  const InputCircuitParams& ic, const SimConfig& cfg,
                                  std::span<const double> omegas);

struct LinearResponseReport {
    double omega = 0.0;
    double gain_static = 0.0;   // |gain| with the static V_Phi
    double gain_dynamic = 0.0;  // M_1 |ac_response(omega)| / |z_loaded|
    double relative_deviation = 0.0;
};

LinearResponseReport validate_linear_response(const SquidParams& p, const StriplineParams& line,
                                              const InputCircuitParams& ic, const SimConfig& cfg,
                                              double omega);

/// M_1^2 / (L_J L_1).
double coupling_squared(const SquidParams& p, const StriplineParams& line);

/// The SQUID with its loop inductance reduced to L_J (1 - M_1^2 / (L_J L_1)), the
/// screened value used by the conventional renormalization picture. Comparison only.
SquidParams renormalized_squid(const SquidParams& p, const StriplineParams& line);

} // namespace squidsim
