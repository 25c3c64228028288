#pragma once

#include "jjarray/linalg.hpp"
#include "jjarray/topology.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <vector>

namespace jjarray {

/// Trapped fluxoid quantum numbers, one per plaquette (internal index order).
class VortexConfig {
public:
    VortexConfig() = default;
    explicit VortexConfig(std::vector<int> n) : n_(std::move(n)) {}
    VortexConfig(std::initializer_list<int> n) : n_(n) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_.size(); }
    int operator[](std::size_t i) const { return n_[i]; }
    [[nodiscard]] std::span<const int> values() const noexcept { return n_; }

    /// n + k·1
    [[nodiscard]] VortexConfig shifted(int k) const;
    [[nodiscard]] VortexConfig negated() const;
    /// Plaquette i's value moves to perm[i].
    [[nodiscard]] VortexConfig permuted(std::span<const std::size_t> perm) const;

    friend auto operator<=>(const VortexConfig&, const VortexConfig&) = default;
    friend bool operator==(const VortexConfig&, const VortexConfig&) = default;

private:
    std::vector<int> n_;
};

/// Circulating phase-currents, clockwise positive, dimensionless
/// (physical current = I_c · value).
struct CurrentVector {
    std::vector<double> values;
};

/// Flux-quantization system of one topology.
///
///   coupling  M: M_pp = junction_count(p), M_pq = -shared_count(p,q)
///   energy    Q: Q_pp = junction_count(p) + shared_total(p), Q_pq = -2·shared_count(p,q)
///   parity    P: pi_junction_count mod 2
///
/// M = diag(boundary) + shared Laplacian, Q = 2M - diag(boundary). Q is the
/// quadratic form of the junction-sum energy in which each shared junction is
/// counted once for each of its two plaquettes; for the triangle stack that
/// expands to 4(I1²+I2²+I3²) + 6I4² - 4(I1I4+I2I4+I3I4).
class CouplingSystem {
public:
    [[nodiscard]] std::size_t size() const noexcept { return coupling_.size(); }
    [[nodiscard]] const IntMatrix& coupling() const noexcept { return coupling_; }
    [[nodiscard]] const IntMatrix& energy_form() const noexcept { return energy_form_; }
    [[nodiscard]] const std::vector<int>& parity() const noexcept { return parity_; }
    [[nodiscard]] const std::vector<int>& boundary() const noexcept { return boundary_; }
    [[nodiscard]] const Cholesky& factor() const noexcept { return factor_; }

    /// W = M⁻¹ Q M⁻¹, so that E = ½κ(2π)² gᵀ W g.
    [[nodiscard]] const RealMatrix& flux_form() const noexcept { return flux_form_; }

private:
    friend CouplingSystem assemble(const ArrayTopology& topology);

    CouplingSystem(IntMatrix m, IntMatrix q, std::vector<int> p, std::vector<int> b, Cholesky f, RealMatrix w)
        : coupling_(std::move(m)), energy_form_(std::move(q)), parity_(std::move(p)), boundary_(std::move(b)),
          factor_(std::move(f)), flux_form_(std::move(w)) {}

    IntMatrix coupling_;
    IntMatrix energy_form_;
    std::vector<int> parity_;
    std::vector<int> boundary_;
    Cholesky factor_;
    RealMatrix flux_form_;
};

/// Pivot threshold for the Cholesky factorization of M.
inline constexpr double kPivotTolerance = 1e-12;

/// Throws Error(Singular) if M is not positive definite.
CouplingSystem assemble(const ArrayTopology& topology);

/// g_i = n_i - f - P_i/2, the reduced frustration.
std::vector<double> reduced_frustration(const CouplingSystem& system, const VortexConfig& n, double f);

/// r = 2π·g
std::vector<double> rhs(const CouplingSystem& system, const VortexConfig& n, double f);

/// Solves M·I = r. Throws Error(Validation) on a dimension mismatch.
CurrentVector solve_currents(const CouplingSystem& system, const VortexConfig& n, double f);

/// E = ½κ·IᵀQI in units of E_J. Throws Error(Domain) unless kappa ∈ (0, 1].
double energy(const CouplingSystem& system, const VortexConfig& n, double f, double kappa);

/// Same energy as ½κ·Σ_p Σ_{junctions of p} φ²: φ = I_p for a boundary
/// junction and I_p - I_q for a junction shared with q, so shared junctions
/// appear once per adjoining plaquette.
double junction_sum_energy(const ArrayTopology& topology, const CurrentVector& currents, double kappa);

/// Explicit inverse of the triangle-stack coupling matrix, row by row:
///   I_outer_k = π/27·(21 g_k + 3 g_j + 3 g_l + 9 g_c)
///   I_central = π/27·(9 (g_1+g_2+g_3) + 27 g_c)
/// with the central triangle at internal index 3 (plaquette id 4).
/// Throws Error(Validation) unless `topology` is the ordinary 4-triangle stack.
CurrentVector closed_form_currents_oracle(const ArrayTopology& topology, const VortexConfig& n, double f);

void check_kappa(double kappa);

}  // namespace jjarray
