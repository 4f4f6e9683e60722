#pragma once

#include "squidsim/constants.hpp"
#include "squidsim/params.hpp"

namespace squidsim {

struct ImpedancePoint {
    double frequency = 0.0;  // rad/s
    Complex z;               // Ohm
    bool warn = false;       // outside the near-fundamental lumped window
};

/// Forward impedance V_i / I_i of the input network with the SQUID decoupled,
/// using the fundamental-mode lumped equivalent (L_1, C_1). Time convention e^{+i omega t}.
Complex forward_impedance(const StriplineParams& line, const InputCircuitParams& ic,
                          double omega);

/// Z + i omega M_1^2 (C_1 / C_i) J_Phi: the input impedance seen with SQUID back-action.
Complex loaded_impedance(Complex z, double j_phi, double omega, double m1, double c1,
                         double ci);

/// True when omega lies outside [0.5, 1.5] omega_1, where the lumped reduction degrades.
bool outside_lumped_window(const StriplineParams& line, double omega);

ImpedancePoint impedance_point(const StriplineParams& line, const InputCircuitParams& ic,
                               double omega);

/// Golden-section minimization of |Z| on [lo, hi] to 1e-9 relative. Throws
/// BracketError when the minimum sits on the bracket boundary.
double find_resonance(const StriplineParams& line, const InputCircuitParams& ic, double lo,
                      double hi);

} // namespace squidsim
