#include "squidsim/input_circuit.hpp"

#include "squidsim/errors.hpp"
#include "squidsim/transmission_line.hpp"

#include <cmath>
#include <sstream>

namespace squidsim {

Complex forward_impedance(const StriplineParams& line, const InputCircuitParams& ic,
                          double omega) {
    if (!(omega > 0) || !std::isfinite(omega))
        throw InvalidArgument("forward_impedance: omega must be positive");
    const double l1 = fundamental_inductance(line);
    const double c1 = fundamental_capacitance(line);
    const double ci = ic.coupling_capacitance;
    const double ri = ic.source_resistance;
    const double inv_r = 1.0 / ic.shunt_resistance;  // 0 for an open shunt

    const double reactive = omega * (c1 + ci + ci * ri * inv_r) - 1.0 / (omega * l1);
    const double resistive = inv_r - ri * ci * (omega * omega * c1 - 1.0 / l1);
    return (l1 / ci) * Complex(resistive, reactive);
}

Complex loaded_impedance(Complex z, double j_phi, double omega, double m1, double c1,
                         double ci) {
    if (!(ci > 0)) throw InvalidArgument("loaded_impedance: C_i must be positive");
    return z + Complex(0.0, omega * m1 * m1 * (c1 / ci) * j_phi);
}

bool outside_lumped_window(const StriplineParams& line, double omega) {
    const double w1 = fundamental_frequency(line);
    return omega > 1.5 * w1 || omega < 0.5 * w1;
}

ImpedancePoint impedance_point(const StriplineParams& line, const InputCircuitParams& ic,
                               double omega) {
    return {omega, forward_impedance(line, ic, omega), outside_lumped_window(line, omega)};
}

double find_resonance(const StriplineParams& line, const InputCircuitParams& ic, double lo,
                      double hi) {
    if (!(lo > 0) || !(hi > lo) || !std::isfinite(hi))
        throw InvalidArgument("find_resonance: bracket must satisfy 0 < lo < hi");

    auto f = [&](double w) { return std::abs(forward_impedance(line, ic, w)); };
    constexpr double tol = 1e-9;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol * 0.5 * (a + b)) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    const double best = 0.5 * (a + b);

    // A minimum that collapsed onto an edge is not an interior resonance.
    const double edge_tol = 4.0 * tol * best;
    if (best - lo <= edge_tol || hi - best <= edge_tol) {
        const double edge = f(lo) <= f(hi) ? lo : hi;
        std::ostringstream os;
        os.precision(17);
        os << "find_resonance: no interior minimum of |Z| in [" << lo << ", " << hi
           << "] rad/s; boundary argmin " << edge;
        throw BracketError(os.str(), edge);
    }
    return best;
}

} // namespace squidsim
