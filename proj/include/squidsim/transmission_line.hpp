#pragma once

#include "squidsim/params.hpp"

namespace squidsim {

/// Lumped equivalent of one standing-wave mode of the open-ended line.
struct Mode {
    int index = 0;             // n >= 1
    double wavenumber = 0.0;   // k_n = n pi / Lambda [1/m]
    double frequency = 0.0;    // omega_n [rad/s]
    double inductance = 0.0;   // L_n = L_1 / n [H]
    double capacitance = 0.0;  // C_n = C_1 / n [F]
    double mutual = 0.0;       // M_n = M_1 / n [H]
    double line_length = 0.0;  // Lambda [m]
};

struct LumpedLC {
    double inductance = 0.0;
    double capacitance = 0.0;
};

double fundamental_inductance(const StriplineParams& line);
double fundamental_capacitance(const StriplineParams& line);
double fundamental_frequency(const StriplineParams& line);

/// Mode n of the line; throws InvalidArgument for n < 1.
Mode mode(const StriplineParams& line, int n);

/// sin(n pi x / Lambda), the current standing wave; x must lie in [0, Lambda].
double current_profile(const Mode& m, double x);
/// cos(n pi x / Lambda), the voltage standing wave.
double voltage_profile(const Mode& m, double x);

/// Broadband mutual inductance M_1 omega_1 / omega, held at M_1 below omega_1.
double mutual_at(const StriplineParams& line, double omega);

/// Broadband L(omega), C(omega) with the same 1/omega scaling and clamp as mutual_at.
LumpedLC effective_lc_at(const StriplineParams& line, double omega);

} // namespace squidsim
