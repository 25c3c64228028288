#pragma once

#include "jjarray/quadratic_core.hpp"

#include <cstddef>
#include <vector>

namespace jjarray {

/// Per-plaquette bounds n_min <= n_i <= n_max for configuration enumeration.
struct EnumerationWindow {
    int n_min = -1;
    int n_max = 1;

    /// Throws Error(Validation) if n_min > n_max or the window holds more
    /// than kMaxConfigurations configurations for `plaquettes` plaquettes.
    void validate(std::size_t plaquettes) const;
};

inline constexpr std::size_t kMaxConfigurations = 10'000'000;

/// Relative tolerance (floored at 1 E_J) under which two energies are equal.
inline constexpr double kDegeneracyTolerance = 1e-9;

bool energies_equal(double x, double y, double tol = kDegeneracyTolerance);

/// All configurations of the window, lexicographically increasing.
std::vector<VortexConfig> enumerate_configs(std::size_t plaquettes, const EnumerationWindow& window);

/// E(f) = a·f² + b·f + c
struct Quadratic {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    [[nodiscard]] double operator()(double f) const { return (a * f + b) * f + c; }
};

struct FluxInterval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] bool is_point() const { return lo == hi; }
    [[nodiscard]] bool contains(double f) const { return lo <= f && f <= hi; }

    friend bool operator==(const FluxInterval&, const FluxInterval&) = default;
};

/// Energy parabola of one configuration and where it is a ground state.
struct LandscapeBranch {
    VortexConfig config;
    Quadratic quad;
    double vertex_f = 0.0;
    /// Closed, sorted, disjoint. Zero-width entries mark isolated ties.
    std::vector<FluxInterval> ground_intervals;
    /// Configurations sharing this exact parabola (1 when unique).
    std::size_t multiplicity = 1;
};

/// Parabola of `n` in f. With W = M⁻¹QM⁻¹ and h = n - P/2:
///   a = ½κ(2π)²·1ᵀW1, b = -κ(2π)²·1ᵀWh, c = ½κ(2π)²·hᵀWh, vertex = 1ᵀWh / 1ᵀW1.
/// The curvature a does not depend on n. ground_intervals is left empty.
LandscapeBranch parabola(const CouplingSystem& system, const VortexConfig& n, double kappa);

/// Uniform grid f_min, f_min + step, ... up to f_max (inclusive within 1e-9·step).
struct FluxGrid {
    double f_min = 0.0;
    double f_max = 1.0;
    double f_step = 0.01;

    /// Throws Error(Validation) unless f_step > 0 and f_min <= f_max.
    [[nodiscard]] std::vector<double> points() const;
};

struct SweepRow {
    double f = 0.0;
    VortexConfig config;
    double energy = 0.0;
    bool is_ground = false;
};

/// Rows ordered by f, then by configuration.
struct SweepTable {
    std::vector<SweepRow> rows;
};

SweepTable sweep(const CouplingSystem& system, const EnumerationWindow& window, const FluxGrid& grid,
                 double kappa);

/// Exact ground-state intervals over [f_lo, f_hi] from parabola
/// intersections. Only branches owning at least one interval are returned,
/// ordered by where their first interval starts, then by configuration.
/// Non-degenerate intervals tile the range; a branch that touches the
/// envelope at a single crossing point gets a zero-width interval there.
std::vector<LandscapeBranch> ground_branches(const CouplingSystem& system, const EnumerationWindow& window,
                                             double f_lo, double f_hi, double kappa);

struct Crossings {
    /// The two parabolas coincide; `roots` is empty.
    bool degenerate_everywhere = false;
    std::vector<double> roots;
};

/// Real solutions of a_quad(f) = b_quad(f), sorted.
Crossings crossing(const LandscapeBranch& a, const LandscapeBranch& b);

struct DegeneracyClass {
    double energy = 0.0;
    std::vector<VortexConfig> configs;
};

/// Configurations grouped by energy at flux f, lowest group first.
std::vector<DegeneracyClass> degeneracy_classes(const CouplingSystem& system, const EnumerationWindow& window,
                                                double f, double kappa, double tol = kDegeneracyTolerance);

}  // namespace jjarray
