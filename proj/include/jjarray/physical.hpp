#pragma once

namespace jjarray::physical {

/// Vacuum permeability, H/m.
inline constexpr double kMu0 = 4.0e-7 * 3.14159265358979323846;
/// Magnetic flux quantum h/2e, Wb (CODATA 2018, 10 significant figures).
inline constexpr double kFluxQuantum = 2.067833848e-15;

/// Plaquette geometry and junction scale. SI units throughout.
struct Params {
    double leg_length = 45e-6;      // D, m
    double leg_half_width = 7.5e-6; // a, m (drawn leg width is 2a)
    int legs = 3;                   // m, sides of the polygon
    double jc_scale = 1500.0;       // I_c = jc_scale·a·D, A/m²

    /// Throws Error(Domain) unless D >= 2a > 0, legs >= 3 and jc_scale > 0.
    void validate() const;
};

/// Self-inductance of an m-sided plaquette built from flat legs of length D
/// and half-width a:
///
///   L = m·μ₀/4π · [ (D-a)·asinh((D-a)/a) - a·asinh(1) + √2·a - √(a² + (D-a)²) ]
///
/// The bracket vanishes at D = 2a. Throws Error(Domain) for D < 2a.
double leg_self_inductance(const Params& params);

/// I_c = jc_scale·a·D, in amperes. Only needs non-negative inputs.
double critical_current(const Params& params);

/// E_J = Φ₀·I_c/2π, in joules. Throws Error(Domain) for I_c <= 0.
double josephson_energy(double critical_current);

/// κ = 1 - 2·L·I_c²/E_J = 1 - 4π·L·I_c/Φ₀, the fraction of the Josephson
/// energy left after the magnetic self-energy correction.
/// Throws Error(Domain) if L < 0, I_c <= 0, or κ <= 0.
double energy_prefactor(double inductance, double critical_current);

/// Energy in units of E_J converted to joules.
double to_joules(double energy_in_ej, double critical_current);

}  // namespace jjarray::physical
