#pragma once

#include "squidsim/gain_analysis.hpp"
#include "squidsim/input_circuit.hpp"
#include "squidsim/squid_dynamics.hpp"

#include <span>
#include <vector>

namespace squidsim {

/// Sets the OpenMP worker count; 0 selects the runtime default.
void set_worker_count(int workers);

/// Worker count from SQUIDSIM_THREADS (0 = auto). Throws ConfigError on garbage.
int worker_count_from_env();

struct FluxPoint {
    double flux = 0.0;  // Wb
    TransferFunctions transfer;
};

// OpenMP kernels. Each point is an independent deterministic computation and the
// results are stored in input order, so output does not depend on the worker count.

std::vector<OperatingPoint> iv_curve(const SquidParams& p, const SimConfig& cfg,
                                     std::span<const double> bias_currents);

std::vector<FluxPoint> flux_scan(const SquidParams& p, const SimConfig& cfg,
                                 std::span<const double> fluxes);

std::vector<ImpedancePoint> impedance_sweep(const StriplineParams& line,
                                            const InputCircuitParams& ic,
                                            std::span<const double> omegas);

std::vector<GainPoint> evaluate_gain(const TransferFunctions& tf, const StriplineParams& line,
                                     const InputCircuitParams& ic,
                                     std::span<const double> omegas);

/// Plain loops kept as the reference the parallel kernels are checked against.
namespace reference {

std::vector<OperatingPoint> iv_curve(const SquidParams& p, const SimConfig& cfg,
                                     std::span<const double> bias_currents);

std::vector<FluxPoint> flux_scan(const SquidParams& p, const SimConfig& cfg,
                                 std::span<const double> fluxes);

std::vector<ImpedancePoint> impedance_sweep(const StriplineParams& line,
                                            const InputCircuitParams& ic,
                                            std::span<const double> omegas);

std::vector<GainPoint> evaluate_gain(const TransferFunctions& tf, const StriplineParams& line,
                                     const InputCircuitParams& ic,
                                     std::span<const double> omegas);

} // namespace reference
} // namespace squidsim
