#include <catch2/catch_amalgamated.hpp>

#include "squidsim/errors.hpp"
#include "squidsim/input_circuit.hpp"
#include "squidsim/transmission_line.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace squidsim;
using Catch::Approx;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// L_1 = C_1 = 1 with these per-length values.
const StriplineParams unit_line{1.0, 1.0, pi, 1.0};
const StriplineParams microstrip{1e-6, 1e-9, 0.0316, 3e-10};

InputCircuitParams lossless_unit() { return {0.0, inf, 1.0, 0.0}; }

// Direct transcription of the forward impedance used as an independent check.
Complex impedance_by_hand(double l1, double c1, double ci, double r, double ri, double w) {
    const Complex j(0.0, 1.0);
    const double inv_r = std::isinf(r) ? 0.0 : 1.0 / r;
    return (l1 / ci) *
           (j * (w * (c1 + ci + ci * ri * inv_r) - 1.0 / (w * l1)) + inv_r -
            ri * ci * (w * w * c1 - 1.0 / l1));
}

} // namespace

TEST_CASE("forward impedance, lossless unit circuit at omega = 1", "[impedance]") {
    const Complex z = forward_impedance(unit_line, lossless_unit(), 1.0);
    CHECK(z.real() == 0.0);
    CHECK(z.imag() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("forward impedance vanishes at the series resonance", "[impedance]") {
    const Complex z = forward_impedance(unit_line, lossless_unit(), 1.0 / std::sqrt(2.0));
    CHECK(std::abs(z) < 1e-15);
}

TEST_CASE("forward impedance with R = 1: 1 + i Ohm", "[impedance]") {
    // Term by term: i[1*(1+1+0) - 1] + 1/1 - 0 = 1 + i, times L_1/C_i = 1.
    const Complex z = forward_impedance(unit_line, {0.0, 1.0, 1.0, 0.0}, 1.0);
    CHECK(z.real() == Approx(1.0).epsilon(1e-14));
    CHECK(z.imag() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("forward impedance matches an independent transcription", "[impedance]") {
    const InputCircuitParams ic{2.5, 800.0, 1.3e-12, 0.0};
    const double l1 = fundamental_inductance(microstrip), c1 = fundamental_capacitance(microstrip);
    for (double w : {1e9, 2.7e9, 3.1e9, 4e9, 9e9}) {
        const Complex z = forward_impedance(microstrip, ic, w);
        const Complex ref = impedance_by_hand(l1, c1, ic.coupling_capacitance,
                                              ic.shunt_resistance, ic.source_resistance, w);
        CHECK(std::abs(z - ref) <= 1e-12 * std::abs(ref));
    }
}

TEST_CASE("forward impedance rejects non-positive omega", "[impedance]") {
    CHECK_THROWS_AS(forward_impedance(unit_line, lossless_unit(), 0.0), InvalidArgument);
    CHECK_THROWS_AS(forward_impedance(unit_line, lossless_unit(), -1.0), InvalidArgument);
}

TEST_CASE("lossless limit is purely reactive at every frequency", "[impedance][property]") {
    const InputCircuitParams ic{0.0, inf, 1e-12, 0.0};
    for (int k = 0; k < 2000; ++k) {
        const double w = 1e7 * std::pow(1e5, k / 2000.0);
        const Complex z = forward_impedance(microstrip, ic, w);
        CHECK(std::abs(z.real()) <= 1e-12 * std::abs(z));
    }
}

TEST_CASE("forward impedance is continuous in omega", "[impedance][property]") {
    const InputCircuitParams ic{1.0, 500.0, 1e-12, 0.0};
    const double w1 = fundamental_frequency(microstrip);
    Complex prev = forward_impedance(microstrip, ic, 0.2 * w1);
    for (int k = 1; k <= 20000; ++k) {
        const double w = 0.2 * w1 + 2.8 * w1 * k / 20000.0;
        const Complex z = forward_impedance(microstrip, ic, w);
        REQUIRE(std::isfinite(z.real()));
        REQUIRE(std::isfinite(z.imag()));
        CHECK(std::abs(z - prev) <= 1e-2 * (std::abs(z) + std::abs(prev)) + 1.0);
        prev = z;
    }
}

TEST_CASE("loaded impedance", "[impedance]") {
    const Complex z(3.0, -2.0);
    CHECK(loaded_impedance(z, 0.0, 1e9, 1e-9, 1e-11, 1e-12) == z);
    CHECK(loaded_impedance(z, 5e6, 1e9, 0.0, 1e-11, 1e-12) == z);

    // 1 + i * 1e9 * (1e-9)^2 * 10 * 1e6 = 1 + 0.01 i
    const Complex loaded = loaded_impedance(Complex(1.0, 0.0), 1e6, 1e9, 1e-9, 10.0, 1.0);
    CHECK(loaded.real() == 1.0);
    CHECK(loaded.imag() == Approx(0.01).epsilon(1e-14));

    CHECK_THROWS_AS(loaded_impedance(z, 1.0, 1.0, 1.0, 1.0, 0.0), InvalidArgument);
}

TEST_CASE("loaded impedance is linear in J_Phi", "[impedance][property]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e9, 1e9);
    const Complex z(12.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        const double a = u(rng), b = u(rng);
        const Complex la = loaded_impedance(z, a, 3e9, 3e-10, 1e-11, 1e-12) - z;
        const Complex lb = loaded_impedance(z, b, 3e9, 3e-10, 1e-11, 1e-12) - z;
        const Complex lab = loaded_impedance(z, a + b, 3e9, 3e-10, 1e-11, 1e-12) - z;
        CHECK(std::abs(lab - (la + lb)) <= 1e-9 * (std::abs(la) + std::abs(lb)) + 1e-15);
    }
}

TEST_CASE("find_resonance: lossless series resonance", "[impedance][resonance]") {
    const double w = find_resonance(unit_line, lossless_unit(), 0.2, 3.0);
    CHECK(std::abs(w - 1.0 / std::sqrt(2.0)) / (1.0 / std::sqrt(2.0)) <= 1e-9);
}

TEST_CASE("find_resonance: tiny coupling capacitance approaches omega_1", "[impedance][resonance]") {
    const InputCircuitParams ic{0.0, inf, 1e-9, 0.0};
    const double w = find_resonance(unit_line, ic, 0.5, 2.0);
    CHECK(std::abs(w - 1.0) <= 1e-8);
    CHECK(std::abs(w - 1.0 / std::sqrt(1.0 + 1e-9)) <= 1e-9);
}

TEST_CASE("find_resonance agrees with a dense-grid argmin", "[impedance][resonance]") {
    const InputCircuitParams ic{0.01, 1.0, 1.0, 0.0};
    const double lo = 0.3, hi = 1.5;
    constexpr int n = 1000000;
    const double dw = (hi - lo) / (n - 1);
    double best = lo, best_abs = std::abs(impedance_by_hand(1, 1, 1, 1.0, 0.01, lo));
    for (int k = 1; k < n; ++k) {
        const double w = lo + k * dw;
        const double a = std::abs(impedance_by_hand(1, 1, 1, 1.0, 0.01, w));
        if (a < best_abs) {
            best_abs = a;
            best = w;
        }
    }
    const double w = find_resonance(unit_line, ic, lo, hi);
    CHECK(std::abs(w - best) <= dw);
}

TEST_CASE("find_resonance is stable under bracket enlargement", "[impedance][resonance]") {
    const InputCircuitParams ic{0.5, 2000.0, 1e-12, 0.0};
    const double w1 = fundamental_frequency(microstrip);
    const double a = find_resonance(microstrip, ic, 0.8 * w1, 1.2 * w1);
    const double b = find_resonance(microstrip, ic, 0.3 * w1, 2.5 * w1);
    CHECK(std::abs(a - b) / a <= 1e-8);
}

TEST_CASE("find_resonance reports a boundary minimum", "[impedance][resonance]") {
    // |Z| decreases monotonically towards the resonance at 1/sqrt(2) ~ 0.707.
    try {
        find_resonance(unit_line, lossless_unit(), 0.1, 0.5);
        FAIL("expected BracketError");
    } catch (const BracketError& e) {
        CHECK(e.boundary_argmin() == 0.5);
    }
    CHECK_THROWS_AS(find_resonance(unit_line, lossless_unit(), 2.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(find_resonance(unit_line, lossless_unit(), 0.0, 1.0), InvalidArgument);
}

TEST_CASE("lumped window flag", "[impedance]") {
    const double w1 = fundamental_frequency(microstrip);
    CHECK_FALSE(outside_lumped_window(microstrip, w1));
    CHECK_FALSE(outside_lumped_window(microstrip, 1.5 * w1));
    CHECK(outside_lumped_window(microstrip, 1.51 * w1));
    CHECK(outside_lumped_window(microstrip, 0.49 * w1));
}
