#include "jjarray/physical.hpp"

#include "jjarray/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace jjarray::physical {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Domain, what); }

}  // namespace

void Params::validate() const {
    if (!(leg_half_width > 0.0)) fail("leg half-width a must be positive");
    if (!(leg_length >= 2.0 * leg_half_width)) fail("leg length D must be at least the leg width 2a");
    if (legs < 3) fail("a plaquette needs at least 3 legs");
    if (!(jc_scale > 0.0)) fail("critical-current scale must be positive");
}

double leg_self_inductance(const Params& params) {
    params.validate();
    const double a = params.leg_half_width;
    const double span = params.leg_length - a;
    const double bracket = span * std::asinh(span / a) - a * std::asinh(1.0) + std::numbers::sqrt2 * a -
                           std::hypot(a, span);
    // exact zero at D = 2a up to rounding
    return params.legs * kMu0 / (4.0 * std::numbers::pi) * std::max(bracket, 0.0);
}

double critical_current(const Params& params) {
    if (params.leg_half_width < 0.0 || params.leg_length < 0.0 || params.jc_scale < 0.0)
        fail("critical current inputs must be non-negative");
    return params.jc_scale * params.leg_half_width * params.leg_length;
}

double josephson_energy(double critical_current) {
    if (!(critical_current > 0.0)) fail("critical current must be positive");
    return kFluxQuantum * critical_current / (2.0 * std::numbers::pi);
}

double energy_prefactor(double inductance, double critical_current) {
    if (!(inductance >= 0.0)) fail("inductance must be non-negative");
    const double ej = josephson_energy(critical_current);
    const double kappa = 1.0 - 2.0 * inductance * critical_current * critical_current / ej;
    if (!(kappa > 0.0))
        fail("unphysical parameters: magnetic self-energy exceeds the Josephson energy (kappa = " +
             std::to_string(kappa) + ")");
    return kappa;
}

double to_joules(double energy_in_ej, double critical_current) {
    return energy_in_ej * josephson_energy(critical_current);
}

}  // namespace jjarray::physical
