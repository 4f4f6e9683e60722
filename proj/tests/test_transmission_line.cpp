#include <catch2/catch_amalgamated.hpp>

#include "squidsim/constants.hpp"
#include "squidsim/errors.hpp"
#include "squidsim/transmission_line.hpp"

#include <cmath>
#include <functional>

using namespace squidsim;
using Catch::Approx;

namespace {

const StriplineParams unit_line{1.0, 1.0, pi, 1.0};
const StriplineParams microstrip{1e-6, 1e-9, 0.0316, 3e-10};

// Composite Simpson with 2^12 panels.
double simpson(const std::function<double(double)>& f, double a, double b) {
    constexpr int panels = 1 << 12;
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int k = 1; k < panels; ++k) sum += f(a + k * h) * (k % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

} // namespace

TEST_CASE("mode: unit line gives omega_n = n", "[line]") {
    const Mode m3 = mode(unit_line, 3);
    CHECK(m3.wavenumber == Approx(3.0).epsilon(1e-15));
    CHECK(m3.frequency == Approx(3.0).epsilon(1e-15));

    const Mode m1 = mode(unit_line, 1);
    CHECK(m1.inductance == Approx(1.0).epsilon(1e-15));
    CHECK(m1.capacitance == Approx(1.0).epsilon(1e-15));
    CHECK(m1.frequency == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("mode: M_n = M_1 / n, L_n = L_1 / n, C_n = C_1 / n", "[line]") {
    const Mode m1 = mode(microstrip, 1);
    const Mode m2 = mode(microstrip, 2);
    CHECK(m2.mutual == microstrip.fundamental_mutual / 2);
    CHECK(m2.inductance == Approx(m1.inductance / 2).epsilon(1e-15));
    CHECK(m2.capacitance == Approx(m1.capacitance / 2).epsilon(1e-15));
    CHECK(m1.inductance == Approx(microstrip.length / pi * microstrip.inductance_per_length));
}

TEST_CASE("mode rejects non-positive index", "[line]") {
    CHECK_THROWS_AS(mode(unit_line, 0), InvalidArgument);
    CHECK_THROWS_AS(mode(unit_line, -2), InvalidArgument);
}

TEST_CASE("spectrum linearity and resonance identity up to n = 1000", "[line][property]") {
    const double w1 = mode(microstrip, 1).frequency;
    for (int n = 1; n <= 1000; ++n) {
        const Mode m = mode(microstrip, n);
        CHECK(std::abs(m.frequency / w1 - n) / n <= 1e-12);
        const double resonance = 1.0 / std::sqrt(m.inductance * m.capacitance);
        CHECK(std::abs(resonance - m.frequency) / m.frequency <= 1e-12);
    }
}

TEST_CASE("profiles at the open ends and midpoint", "[line]") {
    const Mode m1 = mode(microstrip, 1);
    const double len = microstrip.length;
    CHECK(current_profile(m1, 0.0) == 0.0);
    CHECK(voltage_profile(m1, 0.0) == 1.0);
    CHECK(current_profile(m1, len / 2) == Approx(1.0).epsilon(1e-15));
    CHECK(voltage_profile(m1, len / 2) == Approx(0.0).margin(1e-15));

    const Mode m2 = mode(microstrip, 2);
    CHECK(current_profile(m2, len / 2) == Approx(0.0).margin(1e-15));
    // Sign change of the current at x = Lambda m / n.
    CHECK(current_profile(m2, 0.49 * len) > 0);
    CHECK(current_profile(m2, 0.51 * len) < 0);
}

TEST_CASE("profiles reject positions off the line", "[line]") {
    const Mode m1 = mode(microstrip, 1);
    CHECK_THROWS_AS(current_profile(m1, -1e-9), InvalidArgument);
    CHECK_THROWS_AS(voltage_profile(m1, microstrip.length * 1.001), InvalidArgument);
    CHECK_NOTHROW(current_profile(m1, microstrip.length));
}

TEST_CASE("current profiles are orthogonal", "[line][property]") {
    const double len = microstrip.length;
    for (int n = 1; n <= 8; ++n) {
        for (int m = 1; m <= 8; ++m) {
            const Mode a = mode(microstrip, n), b = mode(microstrip, m);
            const double integral = simpson(
                [&](double x) { return current_profile(a, x) * current_profile(b, x); }, 0.0, len);
            if (n == m)
                CHECK(std::abs(integral - len / 2) / (len / 2) <= 1e-9);
            else
                CHECK(std::abs(integral) / (len / 2) <= 1e-9);
        }
    }
}

TEST_CASE("mutual_at follows M_1 omega_1 / omega above the fundamental", "[line]") {
    const double w1 = fundamental_frequency(microstrip);
    const double m1 = microstrip.fundamental_mutual;
    CHECK(mutual_at(microstrip, w1) == m1);
    CHECK(mutual_at(microstrip, 100 * w1) == Approx(m1 / 100).epsilon(1e-14));
    for (int n = 1; n <= 20; ++n)
        CHECK(mutual_at(microstrip, n * w1) == Approx(mode(microstrip, n).mutual).epsilon(1e-14));
    // Clamped below omega_1.
    CHECK(mutual_at(microstrip, 0.3 * w1) == m1);
    CHECK_THROWS_AS(mutual_at(microstrip, 0.0), InvalidArgument);
    CHECK_THROWS_AS(mutual_at(microstrip, -w1), InvalidArgument);
}

TEST_CASE("mutual_at is continuous and non-increasing", "[line][property]") {
    const double w1 = fundamental_frequency(microstrip);
    double prev = mutual_at(microstrip, 1e-3 * w1);
    for (int k = 1; k <= 4000; ++k) {
        const double w = 1e-3 * w1 * std::pow(1e6, k / 4000.0);
        const double m = mutual_at(microstrip, w);
        CHECK(m <= prev);
        CHECK(prev - m <= 0.01 * microstrip.fundamental_mutual);
        prev = m;
    }
    CHECK(mutual_at(microstrip, w1 * (1 + 1e-12)) == Approx(mutual_at(microstrip, w1)));
}

TEST_CASE("effective_lc_at scales like 1/omega", "[line]") {
    const double w1 = fundamental_frequency(microstrip);
    const Mode m1 = mode(microstrip, 1);
    const auto at1 = effective_lc_at(microstrip, w1);
    CHECK(at1.inductance == Approx(m1.inductance));
    CHECK(at1.capacitance == Approx(m1.capacitance));
    const auto at2 = effective_lc_at(microstrip, 2 * w1);
    CHECK(at2.inductance == Approx(m1.inductance / 2).epsilon(1e-14));
    CHECK(at2.capacitance == Approx(m1.capacitance / 2).epsilon(1e-14));
    CHECK_THROWS_AS(effective_lc_at(microstrip, 0.0), InvalidArgument);
}

TEST_CASE("L(omega) C(omega) omega^2 = 1 on a log grid above omega_1", "[line][property]") {
    const double w1 = fundamental_frequency(microstrip);
    for (int k = 0; k <= 600; ++k) {
        const double w = w1 * std::pow(10.0, k / 100.0);
        const auto lc = effective_lc_at(microstrip, w);
        CHECK(std::abs(lc.inductance * lc.capacitance * w * w - 1.0) <= 1e-12);
    }
}
