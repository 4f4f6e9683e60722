#include "squidsim/transmission_line.hpp"

#include "squidsim/constants.hpp"
#include "squidsim/errors.hpp"

#include <cmath>
#include <string>

namespace squidsim {
namespace {

void require_positive_omega(double omega) {
    if (!(omega > 0) || !std::isfinite(omega))
        throw InvalidArgument("omega must be positive and finite, got " + std::to_string(omega));
}

// omega_1 / omega, clamped to 1 at and below the fundamental.
double scale_above_fundamental(const StriplineParams& line, double omega) {
    require_positive_omega(omega);
    double w1 = fundamental_frequency(line);
    return omega <= w1 ? 1.0 : w1 / omega;
}

double profile_phase(const Mode& m, double x) {
    if (!(x >= 0.0 && x <= m.line_length))
        throw InvalidArgument("position " + std::to_string(x) + " m outside [0, " +
                              std::to_string(m.line_length) + "] m");
    return m.index * pi * x / m.line_length;
}

} // namespace

double fundamental_inductance(const StriplineParams& line) {
    return line.length / pi * line.inductance_per_length;
}

double fundamental_capacitance(const StriplineParams& line) {
    return line.length / pi * line.capacitance_per_length;
}

double fundamental_frequency(const StriplineParams& line) {
    return (pi / line.length) /
           std::sqrt(line.inductance_per_length * line.capacitance_per_length);
}

Mode mode(const StriplineParams& line, int n) {
    if (n < 1) throw InvalidArgument("mode index must be >= 1, got " + std::to_string(n));
    validate(line);
    Mode m;
    m.index = n;
    m.wavenumber = pi * n / line.length;
    m.frequency = m.wavenumber / std::sqrt(line.inductance_per_length * line.capacitance_per_length);
    m.inductance = fundamental_inductance(line) / n;
    m.capacitance = fundamental_capacitance(line) / n;
    m.mutual = line.fundamental_mutual / n;
    m.line_length = line.length;
    return m;
}

double current_profile(const Mode& m, double x) { return std::sin(profile_phase(m, x)); }

double voltage_profile(const Mode& m, double x) { return std::cos(profile_phase(m, x)); }

double mutual_at(const StriplineParams& line, double omega) {
    return line.fundamental_mutual * scale_above_fundamental(line, omega);
}

LumpedLC effective_lc_at(const StriplineParams& line, double omega) {
    double s = scale_above_fundamental(line, omega);
    return {fundamental_inductance(line) * s, fundamental_capacitance(line) * s};
}

} // namespace squidsim
