#include "squidsim/gain_analysis.hpp"

#include "squidsim/errors.hpp"
#include "squidsim/input_circuit.hpp"
#include "squidsim/sweeps.hpp"
#include "squidsim/transmission_line.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace squidsim {

GainPoint gain_at(const TransferFunctions& tf, const StriplineParams& line,
                  const InputCircuitParams& ic, double omega) {
    if (!std::isfinite(tf.v_phi) || !std::isfinite(tf.j_phi))
        throw InvalidArgument("gain_at: transfer functions must be finite");

    GainPoint g;
    g.frequency = omega;
    g.z = forward_impedance(line, ic, omega);
    const double m1 = line.fundamental_mutual;
    g.z_loaded = loaded_impedance(g.z, tf.j_phi, omega, m1, fundamental_capacitance(line),
                                  ic.coupling_capacitance);
    if (std::abs(g.z_loaded) < 1e-12) {
        std::ostringstream os;
        os.precision(17);
        os << "loaded impedance |Z| = " << std::abs(g.z_loaded) << " Ohm at omega = " << omega
           << " rad/s; the gain is singular (lossless resonance)";
        throw SingularGainError(os.str(), std::abs(g.z_loaded));
    }
    g.gain = m1 * tf.v_phi / g.z_loaded;
    g.delta_flux_per_volt = m1 / g.z_loaded;
    g.screening_ratio = tf.operating_point.josephson_frequency > 0
                            ? screening_ratio(tf.operating_point, line)
                            : std::numeric_limits<double>::quiet_NaN();
    g.warn = outside_lumped_window(line, omega);
    return g;
}

double screening_ratio(const OperatingPoint& op, const StriplineParams& line) {
    if (!(op.josephson_frequency > 0))
        throw ZeroVoltageError("screening ratio undefined: no Josephson oscillation (V = 0)");
    const double r = fundamental_frequency(line) / op.josephson_frequency;
    return r >= 1.0 ? 1.0 : r * r;
}

std::vector<GainPoint> gain_sweep(const SquidParams& p, const StriplineParams& line,
                                  const InputCircuitParams& ic, const SimConfig& cfg,
                                  std::span<const double> omegas) {
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        if (!(omegas[k] > 0)) throw InvalidArgument("gain_sweep: frequencies must be positive");
        if (k > 0 && !(omegas[k] >= omegas[k - 1]))
            throw InvalidArgument("gain_sweep: frequencies must be sorted ascending");
    }
    const TransferFunctions tf = transfer_functions(p, cfg);
    return evaluate_gain(tf, line, ic, omegas);
}

LinearResponseReport validate_linear_response(const SquidParams& p, const StriplineParams& line,
                                              const InputCircuitParams& ic, const SimConfig& cfg,
                                              double omega) {
    LinearResponseReport r;
    r.omega = omega;
    const TransferFunctions tf = transfer_functions(p, cfg);
    const GainPoint g = gain_at(tf, line, ic, omega);
    r.gain_static = std::abs(g.gain);
    if (line.fundamental_mutual == 0.0) return r;

    const Complex response = ac_response(p, cfg, omega);
    r.gain_dynamic = line.fundamental_mutual * std::abs(response) / std::abs(g.z_loaded);
    if (r.gain_static > 0)
        r.relative_deviation = std::abs(r.gain_dynamic - r.gain_static) / r.gain_static;
    else
        r.relative_deviation =
            r.gain_dynamic == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return r;
}

double coupling_squared(const SquidParams& p, const StriplineParams& line) {
    const double m1 = line.fundamental_mutual;
    return m1 * m1 / (p.loop_inductance * fundamental_inductance(line));
}

SquidParams renormalized_squid(const SquidParams& p, const StriplineParams& line) {
    const double alpha2 = coupling_squared(p, line);
    if (!(alpha2 < 1.0)) {
        std::ostringstream os;
        os << "renormalized inductance undefined: M_1^2/(L_J L_1) = " << alpha2 << " >= 1";
        throw InvalidArgument(os.str());
    }
    SquidParams q = p;
    q.loop_inductance = p.loop_inductance * (1.0 - alpha2);
    return q;
}

} // namespace squidsim
