#pragma once

#include <complex>
#include <numbers>

namespace squidsim {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

namespace constants {

/// Magnetic flux quantum h/2e in Wb.
inline constexpr double flux_quantum = 2.067833848e-15;
/// Elementary charge in C.
inline constexpr double elementary_charge = 1.602176634e-19;

} // namespace constants
} // namespace squidsim
