#include "jjarray/error.hpp"
#include "jjarray/physical.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace jjarray;
using namespace jjarray::physical;
using Catch::Approx;

namespace {

ErrorKind domain_kind(double (*fn)(double, double), double x, double y) {
    try {
        (void)fn(x, y);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Numerical;
}

}  // namespace

TEST_CASE("self-inductance of the triangular plaquette", "[physical]") {
    const Params p{};  // D = 45 um, a = 7.5 um, m = 3
    const double l = leg_self_inductance(p);
    // direct evaluation of the bracket at D-a = 37.5 um, a = 7.5 um
    const double a = 7.5e-6;
    const double s = 37.5e-6;
    const double bracket = s * std::asinh(5.0) - a * std::asinh(1.0) + std::sqrt(2.0) * a - std::sqrt(a * a + s * s);
    CHECK(l == Approx(3e-7 * bracket).epsilon(1e-12));
    CHECK(l == Approx(1.575e-11).epsilon(0.002));
    CHECK(std::abs(l - 16e-12) / 16e-12 < 0.02);

    Params square = p;
    square.legs = 4;
    CHECK(leg_self_inductance(square) == Approx(4.0 / 3.0 * l).epsilon(1e-14));

    Params hexagon = p;
    hexagon.legs = 6;
    CHECK(leg_self_inductance(hexagon) == Approx(2.0 * l).epsilon(1e-14));
}

TEST_CASE("self-inductance vanishes at D = 2a and is rejected below", "[physical]") {
    Params p{};
    p.leg_length = 2.0 * p.leg_half_width;
    CHECK(leg_self_inductance(p) == Approx(0.0).margin(1e-25));

    p.leg_length = 1.9 * p.leg_half_width;
    CHECK_THROWS_AS(leg_self_inductance(p), Error);
    p = Params{};
    p.legs = 2;
    CHECK_THROWS_AS(leg_self_inductance(p), Error);
    p = Params{};
    p.leg_half_width = 0.0;
    CHECK_THROWS_AS(leg_self_inductance(p), Error);
}

TEST_CASE("self-inductance increases with leg length", "[physical][property]") {
    Params p{};
    const double a = p.leg_half_width;
    double previous = -1.0;
    for (int k = 1; k <= 400; ++k) {
        p.leg_length = 2.0 * a + (98.0 * a) * k / 400.0;
        const double l = leg_self_inductance(p);
        CHECK(l > previous);
        previous = l;
    }
}

TEST_CASE("critical current", "[physical]") {
    Params p{};
    CHECK(critical_current(p) == Approx(5.0625e-7).epsilon(1e-14));
    CHECK(std::abs(critical_current(p) - 0.5e-6) / 0.5e-6 < 0.015);

    Params doubled = p;
    doubled.jc_scale *= 2.0;
    CHECK(critical_current(doubled) == Approx(2.0 * critical_current(p)).epsilon(1e-15));

    Params zero = p;
    zero.leg_half_width = 0.0;
    CHECK(critical_current(zero) == 0.0);
}

TEST_CASE("Josephson energy", "[physical]") {
    CHECK(josephson_energy(0.5e-6) == Approx(1.6455e-22).epsilon(1e-4));
    CHECK(josephson_energy(1.0) == Approx(kFluxQuantum / (2 * std::numbers::pi)).epsilon(1e-15));
    CHECK(josephson_energy(1.0) == Approx(3.2910e-16).epsilon(1e-4));
    CHECK(josephson_energy(5.0625e-7) == Approx(1.666e-22).epsilon(1e-3));
    CHECK_THROWS_AS(josephson_energy(0.0), Error);
    CHECK_THROWS_AS(josephson_energy(-1e-6), Error);
}

TEST_CASE("energy prefactor", "[physical]") {
    CHECK(energy_prefactor(16e-12, 0.5e-6) == Approx(0.9514).margin(1e-4));
    CHECK(energy_prefactor(0.0, 0.5e-6) == 1.0);
    // direct evaluation: 1 - 4π·L·I_c/Φ₀ with L = 15.75 pH, I_c = 0.50625 uA
    CHECK(energy_prefactor(1.575e-11, 5.0625e-7) ==
          Approx(1.0 - 4 * std::numbers::pi * 1.575e-11 * 5.0625e-7 / kFluxQuantum).epsilon(1e-14));
    CHECK(energy_prefactor(1.575e-11, 5.0625e-7) == Approx(0.9516).margin(2e-4));

    // a loop large enough that the self-energy swamps the Josephson energy
    CHECK(domain_kind(&energy_prefactor, 1e-9, 1e-6) == ErrorKind::Domain);
    CHECK(domain_kind(&energy_prefactor, -1e-12, 1e-6) == ErrorKind::Domain);
    CHECK(domain_kind(&energy_prefactor, 1e-12, 0.0) == ErrorKind::Domain);
}

TEST_CASE("prefactor stays in (0, 1) and tends to 1", "[physical][property]") {
    const double ic = 5.0625e-7;
    double previous = 0.0;
    for (int k = 0; k <= 10; ++k) {
        const double kappa = energy_prefactor(16e-12 * std::pow(10.0, -k), ic);
        CHECK(kappa > 0.0);
        CHECK(kappa < 1.0);
        CHECK(kappa > previous);
        previous = kappa;
    }
    CHECK(1.0 - previous < 1e-10);
}

TEST_CASE("energies convert to joules", "[physical]") {
    CHECK(to_joules(2.0, 0.5e-6) == Approx(2.0 * josephson_energy(0.5e-6)));
}
