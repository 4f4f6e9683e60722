#include "squidsim/squid_dynamics.hpp"

#include "squidsim/errors.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace squidsim {
namespace {

constexpr double zero_voltage_advance = 0.1;  // rad over the window
constexpr double half_window_tolerance = 1e-3;
constexpr std::size_t min_crossing_intervals = 4;

SquidState axpy(const SquidState& s, double h, const StateDerivative& k) {
    return {s.delta1 + h * k.d_delta1, s.delta2 + h * k.d_delta2, s.ddelta1 + h * k.dd_delta1,
            s.ddelta2 + h * k.dd_delta2};
}

bool finite(const SquidState& s) {
    return std::isfinite(s.delta1) && std::isfinite(s.delta2) && std::isfinite(s.ddelta1) &&
           std::isfinite(s.ddelta2);
}

double sum_phase(const SquidState& s) { return 0.5 * (s.delta1 + s.delta2); }

// Classical RK4 with the external flux evaluated at each stage time.
template <class Flux>
SquidState rk4_driven(const SquidState& s, DimensionlessSquid d, double t, double h,
                      const Flux& flux) {
    d.flux = flux(t);
    const auto k1 = derivatives(s, d);
    d.flux = flux(t + 0.5 * h);
    const auto k2 = derivatives(axpy(s, 0.5 * h, k1), d);
    const auto k3 = derivatives(axpy(s, 0.5 * h, k2), d);
    d.flux = flux(t + h);
    const auto k4 = derivatives(axpy(s, h, k3), d);
    SquidState out{
        s.delta1 + h / 6.0 * (k1.d_delta1 + 2.0 * k2.d_delta1 + 2.0 * k3.d_delta1 + k4.d_delta1),
        s.delta2 + h / 6.0 * (k1.d_delta2 + 2.0 * k2.d_delta2 + 2.0 * k3.d_delta2 + k4.d_delta2),
        s.ddelta1 +
            h / 6.0 * (k1.dd_delta1 + 2.0 * k2.dd_delta1 + 2.0 * k3.dd_delta1 + k4.dd_delta1),
        s.ddelta2 +
            h / 6.0 * (k1.dd_delta2 + 2.0 * k2.dd_delta2 + 2.0 * k3.dd_delta2 + k4.dd_delta2)};
    // The beta_c = 0 rates are slaved to the phases at the new time.
    if (d.beta_c == 0.0) {
        auto r = derivatives(out, d);
        out.ddelta1 = r.d_delta1;
        out.ddelta2 = r.d_delta2;
    }
    return out;
}

void check_finite(const SquidState& y, double t) {
    if (finite(y)) return;
    std::ostringstream os;
    os << "state became non-finite at dimensionless time " << t;
    throw DivergenceError(os.str(), t);
}

// Times at which the sum phase first reaches successive multiples of 2 pi, with the
// running integral of j at those instants. One list per direction of travel.
struct CrossingLog {
    std::vector<double> time;
    std::vector<double> integral;
};

// Flux(t) returns the dimensionless external flux at dimensionless time t.
template <class Flux>
SteadyState measure_window(SquidState& y, double& t, double h, long long steps,
                           DimensionlessSquid d, const Flux& flux) {
    d.flux = flux(t);
    const double sigma0 = sum_phase(y);
    double j_prev = circulating_current(y, d);
    double integral = 0.0;

    CrossingLog up, down;
    long long up_level = static_cast<long long>(std::floor(sigma0 / two_pi));
    long long down_level = static_cast<long long>(std::ceil(sigma0 / two_pi));

    const long long mid = steps / 2;
    double sigma_mid = sigma0;

    for (long long k = 0; k < steps; ++k) {
        const double sigma_a = sum_phase(y);
        const double integral_a = integral;
        const double t_a = t;

        y = rk4_driven(y, d, t_a, h, flux);
        t = t_a + h;
        d.flux = flux(t);
        check_finite(y, t);
        const double j = circulating_current(y, d);
        integral += 0.5 * h * (j_prev + j);
        j_prev = j;

        const double sigma_b = sum_phase(y);
        while (sigma_b >= two_pi * (up_level + 1)) {
            ++up_level;
            const double f = (two_pi * up_level - sigma_a) / (sigma_b - sigma_a);
            up.time.push_back(t_a + f * h);
            up.integral.push_back(integral_a + f * (integral - integral_a));
        }
        while (sigma_b <= two_pi * (down_level - 1)) {
            --down_level;
            const double f = (two_pi * down_level - sigma_a) / (sigma_b - sigma_a);
            down.time.push_back(t_a + f * h);
            down.integral.push_back(integral_a + f * (integral - integral_a));
        }
        if (k + 1 == mid) sigma_mid = sum_phase(y);
    }

    const double window = h * static_cast<double>(steps);
    SteadyState out;
    out.window = window;
    out.phase_advance = sum_phase(y) - sigma0;

    if (std::abs(out.phase_advance) < zero_voltage_advance) {
        out.zero_voltage = true;
        out.current = integral / window;
        out.converged = true;
        return out;
    }

    const bool rising = out.phase_advance > 0;
    const CrossingLog& log = rising ? up : down;
    const double sign = rising ? 1.0 : -1.0;
    if (log.time.size() > min_crossing_intervals) {
        // Average over whole phase-slip periods so the oscillation cancels.
        const std::size_t n = log.time.size() - 1;
        const std::size_t m = n / 2;
        const double span = log.time[n] - log.time[0];
        out.voltage = sign * two_pi * static_cast<double>(n) / span;
        out.current = (log.integral[n] - log.integral[0]) / span;
        out.first_half_voltage =
            sign * two_pi * static_cast<double>(m) / (log.time[m] - log.time[0]);
        out.second_half_voltage =
            sign * two_pi * static_cast<double>(n - m) / (log.time[n] - log.time[m]);
    } else {
        const double half_a = h * static_cast<double>(mid);
        const double half_b = window - half_a;
        out.voltage = out.phase_advance / window;
        out.current = integral / window;
        out.first_half_voltage = (sigma_mid - sigma0) / half_a;
        out.second_half_voltage = (sum_phase(y) - sigma_mid) / half_b;
    }
    out.converged =
        std::abs(out.first_half_voltage - out.second_half_voltage) < half_window_tolerance;
    return out;
}

void check_step(const DimensionlessSquid& d, double h) {
    if (!(d.beta_l > 0)) throw InvalidArgument("beta_L must be positive");
    const double limit = max_stable_step(d);
    if (h > limit) {
        std::ostringstream os;
        os << "step = " << h << " exceeds the RK4 stability limit " << limit << " for beta_L = "
           << d.beta_l << ", beta_c = " << d.beta_c;
        throw ConfigError(os.str());
    }
}

template <class Flux>
void advance(SquidState& y, double& t, double h, long long steps, DimensionlessSquid d,
             const Flux& flux) {
    for (long long k = 0; k < steps; ++k) {
        y = rk4_driven(y, d, t, h, flux);
        t += h;
        check_finite(y, t);
    }
}

OperatingPoint to_si(const SteadyState& s, const SquidUnits& u) {
    OperatingPoint op;
    op.mean_voltage = s.voltage * u.voltage;
    op.circulating_current = s.current * u.current;
    op.josephson_frequency =
        s.zero_voltage ? 0.0 : two_pi * std::abs(op.mean_voltage) / constants::flux_quantum;
    op.converged = s.converged;
    return op;
}

} // namespace

double circulating_current(const SquidState& s, const DimensionlessSquid& d) {
    return (s.delta1 - s.delta2 - two_pi * d.flux) / d.beta_l;
}

StateDerivative derivatives(const SquidState& s, const DimensionlessSquid& d) {
    if (!(d.beta_l > 0)) throw InvalidArgument("derivatives: beta_L must be positive");
    const double j = circulating_current(s, d);
    const double f1 = 0.5 * d.bias - j - std::sin(s.delta1);
    const double f2 = 0.5 * d.bias + j - std::sin(s.delta2);
    if (d.beta_c == 0.0) return {f1, f2, 0.0, 0.0};
    return {s.ddelta1, s.ddelta2, (f1 - s.ddelta1) / d.beta_c, (f2 - s.ddelta2) / d.beta_c};
}

double voltage(const SquidState& s, const DimensionlessSquid& d) {
    if (d.beta_c == 0.0) {
        auto r = derivatives(s, d);
        return 0.5 * (r.d_delta1 + r.d_delta2);
    }
    return 0.5 * (s.ddelta1 + s.ddelta2);
}

SquidState rk4_step(const SquidState& s, const DimensionlessSquid& d, double h) {
    return rk4_driven(s, d, 0.0, h, [phi = d.flux](double) { return phi; });
}

SquidState initial_state(const SimConfig& cfg) {
    return {cfg.initial_delta1, cfg.initial_delta2, cfg.initial_ddelta1, cfg.initial_ddelta2};
}

double max_stable_step(const DimensionlessSquid& d) {
    // Stiffest linearized mode: the phase difference, restoring rate 2/beta_L + 1.
    constexpr double rk4_radius = 2.7;
    const double k = 2.0 / d.beta_l + 1.0;
    if (d.beta_c == 0.0) return rk4_radius / k;
    const double disc = 1.0 - 4.0 * d.beta_c * k;
    double lambda;
    if (disc >= 0.0)
        lambda = (1.0 + std::sqrt(disc)) / (2.0 * d.beta_c);
    else
        lambda = std::sqrt(k / d.beta_c);
    return rk4_radius / lambda;
}

SteadyState steady_state(const DimensionlessSquid& d, const SimConfig& cfg) {
    validate(cfg);
    const double h = cfg.step;
    check_step(d, h);
    auto flux = [phi = d.flux](double) { return phi; };

    SquidState y = initial_state(cfg);
    if (d.beta_c == 0.0) y = rk4_step(y, d, 0.0);  // slave the rates to the phases
    double t = 0.0;
    advance(y, t, h, std::llround(cfg.transient_skip / h), d, flux);

    double window = cfg.averaging_window;
    SteadyState s;
    for (int attempt = 0; attempt <= cfg.max_extensions; ++attempt) {
        s = measure_window(y, t, h, std::llround(window / h), d, flux);
        if (s.converged) break;
        window *= 2.0;
    }
    return s;
}

OperatingPoint run_to_steady(const SquidParams& p, const SimConfig& cfg) {
    return to_si(steady_state(normalize(p), cfg), units(p));
}

TransferFunctions transfer_functions(const SquidParams& p, const SimConfig& cfg) {
    validate(cfg);
    const double dphi = cfg.flux_fd_step * constants::flux_quantum;

    auto at = [&](double flux) {
        SquidParams q = p;
        q.external_flux = flux;
        OperatingPoint op = run_to_steady(q, cfg);
        if (!op.converged) {
            std::ostringstream os;
            os.precision(17);
            os << "operating point did not converge at external flux " << flux << " Wb ("
               << flux / constants::flux_quantum << " Phi_0)";
            throw ConvergenceError(os.str(), flux);
        }
        return op;
    };

    TransferFunctions tf;
    const OperatingPoint plus = at(p.external_flux + dphi);
    const OperatingPoint minus = at(p.external_flux - dphi);
    tf.v_phi = (plus.mean_voltage - minus.mean_voltage) / (2.0 * dphi);
    tf.j_phi = (plus.circulating_current - minus.circulating_current) / (2.0 * dphi);
    tf.operating_point = run_to_steady(p, cfg);
    return tf;
}

Complex ac_response(const SquidParams& p, const SimConfig& cfg, double omega) {
    validate(cfg);
    if (!(omega > 0) || !std::isfinite(omega))
        throw InvalidArgument("ac_response: omega must be positive");

    const OperatingPoint op = run_to_steady(p, cfg);
    if (!(omega < op.josephson_frequency / 5.0)) {
        std::ostringstream os;
        os << "ac_response: omega = " << omega << " rad/s is not below omega_J/5 = "
           << op.josephson_frequency / 5.0 << " rad/s";
        throw InvalidArgument(os.str());
    }

    const DimensionlessSquid d = normalize(p);
    const SquidUnits u = units(p);
    const double drive = omega * u.time;  // dimensionless angular frequency
    const double period = two_pi / drive;
    const double periods = std::floor(cfg.averaging_window / period);
    if (periods < 8.0) {
        std::ostringstream os;
        os << "averaging_window = " << cfg.averaging_window << " holds " << periods
           << " drive periods of " << period << "; at least 8 are required";
        throw ConfigError(os.str());
    }

    // Shrink the step so the lock-in window holds an exact integer number of samples.
    const double span = periods * period;
    const long long n = static_cast<long long>(std::ceil(span / cfg.step));
    const double h = span / static_cast<double>(n);
    check_step(d, h);

    const double a = cfg.ac_amplitude;
    auto flux = [phi = d.flux, a, drive](double t) { return phi + a * std::cos(drive * t); };

    SquidState y = initial_state(cfg);
    double t = 0.0;
    advance(y, t, h, static_cast<long long>(std::ceil(cfg.transient_skip / h)), d, flux);

    const double t0 = t;
    DimensionlessSquid dt = d;
    Complex acc{0.0, 0.0};
    for (long long k = 1; k < n; ++k) {
        y = rk4_driven(y, d, t, h, flux);
        t = t0 + h * static_cast<double>(k);
        dt.flux = flux(t);
        check_finite(y, t);
        const double w = 1.0 - std::cos(two_pi * static_cast<double>(k) / static_cast<double>(n));
        acc += voltage(y, dt) * w * std::polar(1.0, -drive * t);
    }
    // Hann-weighted trapezoid; both endpoint weights vanish.
    const Complex amplitude = 2.0 * acc * h / span;
    return amplitude / a * (u.voltage / constants::flux_quantum);
}

} // namespace squidsim
