#include "squidsim/sweeps.hpp"

#include "squidsim/errors.hpp"

#include <omp.h>

#include <charconv>
#include <cstdlib>
#include <exception>
#include <string>

namespace squidsim {
namespace {

// Runs f(k) for every index on the OpenMP team. The first failure by index is
// rethrown so the reported error does not depend on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < count; ++k) {
        try {
            out[k] = f(static_cast<std::size_t>(k));
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

OperatingPoint iv_point(const SquidParams& p, const SimConfig& cfg, double bias) {
    SquidParams q = p;
    q.bias_current = bias;
    return run_to_steady(q, cfg);
}

FluxPoint flux_point(const SquidParams& p, const SimConfig& cfg, double flux) {
    SquidParams q = p;
    q.external_flux = flux;
    return {flux, transfer_functions(q, cfg)};
}

} // namespace

void set_worker_count(int workers) {
    if (workers < 0) throw ConfigError("worker count must be >= 0");
    omp_set_num_threads(workers == 0 ? omp_get_num_procs() : workers);
}

int worker_count_from_env() {
    const char* raw = std::getenv("SQUIDSIM_THREADS");
    if (!raw || !*raw) return 0;
    std::string s(raw);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
        throw ConfigError("SQUIDSIM_THREADS must be a non-negative integer, got '" + s + "'");
    return value;
}

std::vector<OperatingPoint> iv_curve(const SquidParams& p, const SimConfig& cfg,
                                     std::span<const double> bias_currents) {
    return parallel_map<OperatingPoint>(bias_currents.size(), [&](std::size_t k) {
        return iv_point(p, cfg, bias_currents[k]);
    });
}

std::vector<FluxPoint> flux_scan(const SquidParams& p, const SimConfig& cfg,
                                 std::span<const double> fluxes) {
    return parallel_map<FluxPoint>(fluxes.size(),
                                   [&](std::size_t k) { return flux_point(p, cfg, fluxes[k]); });
}

std::vector<ImpedancePoint> impedance_sweep(const StriplineParams& line,
                                            const InputCircuitParams& ic,
                                            std::span<const double> omegas) {
    return parallel_map<ImpedancePoint>(
        omegas.size(), [&](std::size_t k) { return impedance_point(line, ic, omegas[k]); });
}

std::vector<GainPoint> evaluate_gain(const TransferFunctions& tf, const StriplineParams& line,
                                     const InputCircuitParams& ic,
                                     std::span<const double> omegas) {
    return parallel_map<GainPoint>(omegas.size(),
                                   [&](std::size_t k) { return gain_at(tf, line, ic, omegas[k]); });
}

namespace reference {

std::vector<OperatingPoint> iv_curve(const SquidParams& p, const SimConfig& cfg,
                                     std::span<const double> bias_currents) {
    std::vector<OperatingPoint> out;
    out.reserve(bias_currents.size());
    for (double bias : bias_currents) out.push_back(iv_point(p, cfg, bias));
    return out;
}

std::vector<FluxPoint> flux_scan(const SquidParams& p, const SimConfig& cfg,
                                 std::span<const double> fluxes) {
    std::vector<FluxPoint> out;
    out.reserve(fluxes.size());
    for (double flux : fluxes) out.push_back(flux_point(p, cfg, flux));
    return out;
}

std::vector<ImpedancePoint> impedance_sweep(const StriplineParams& line,
                                            const InputCircuitParams& ic,
                                            std::span<const double> omegas) {
    std::vector<ImpedancePoint> out;
    out.reserve(omegas.size());
    for (double w : omegas) out.push_back(impedance_point(line, ic, w));
    return out;
}

std::vector<GainPoint> evaluate_gain(const TransferFunctions& tf, const StriplineParams& line,
                                     const InputCircuitParams& ic,
                                     std::span<const double> omegas) {
    std::vector<GainPoint> out;
    out.reserve(omegas.size());
    for (double w : omegas) out.push_back(gain_at(tf, line, ic, w));
    return out;
}

} // namespace reference
} // namespace squidsim
