#include "jjarray/quadratic_core.hpp"

#include "jjarray/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace jjarray {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dimension(const CouplingSystem& system, const VortexConfig& n) {
    if (n.size() != system.size())
        throw Error(ErrorKind::Validation, "vortex configuration has " + std::to_string(n.size()) +
                                               " entries, topology has " + std::to_string(system.size()) +
                                               " plaquettes");
}

}  // namespace

VortexConfig VortexConfig::shifted(int k) const {
    auto out = n_;
    for (auto& v : out) v += k;
    return VortexConfig(std::move(out));
}

VortexConfig VortexConfig::negated() const {
    auto out = n_;
    for (auto& v : out) v = -v;
    return VortexConfig(std::move(out));
}

VortexConfig VortexConfig::permuted(std::span<const std::size_t> perm) const {
    std::vector<int> out(n_.size());
    for (std::size_t i = 0; i < n_.size(); ++i) out[perm[i]] = n_[i];
    return VortexConfig(std::move(out));
}

void check_kappa(double kappa) {
    if (!(kappa > 0.0 && kappa <= 1.0))
        throw Error(ErrorKind::Domain, "energy prefactor kappa must lie in (0, 1], got " + std::to_string(kappa));
}

CouplingSystem assemble(const ArrayTopology& topology) {
    const auto n = topology.size();
    IntMatrix m(n);
    IntMatrix q(n);
    std::vector<int> boundary(n);
    for (std::size_t i = 0; i < n; ++i) {
        boundary[i] = topology.boundary_count(i);
        m(i, i) = topology.junction_count(i);
        q(i, i) = topology.junction_count(i) + topology.shared_total(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            m(i, j) = -topology.shared_count(i, j);
            q(i, j) = -2 * topology.shared_count(i, j);
        }
    }

    auto factor = Cholesky::factor(m.cast<double>(), kPivotTolerance);
    if (!factor)
        throw Error(ErrorKind::Singular, "coupling matrix of '" + topology.name() + "' is not positive definite");

    const auto inv = factor->inverse();
    const auto qr = q.cast<double>();
    RealMatrix w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) acc += inv(i, k) * qr(k, l) * inv(l, j);
            w(i, j) = acc;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) w(j, i) = w(i, j);

    return CouplingSystem(std::move(m), std::move(q), topology.pi_parity(), std::move(boundary), std::move(*factor),
                          std::move(w));
}

std::vector<double> reduced_frustration(const CouplingSystem& system, const VortexConfig& n, double f) {
    check_dimension(system, n);
    std::vector<double> g(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) g[i] = n[i] - f - 0.5 * system.parity()[i];
    return g;
}

std::vector<double> rhs(const CouplingSystem& system, const VortexConfig& n, double f) {
    auto r = reduced_frustration(system, n, f);
    for (auto& v : r) v *= kTwoPi;
    return r;
}

CurrentVector solve_currents(const CouplingSystem& system, const VortexConfig& n, double f) {
    const auto r = rhs(system, n, f);
    return {system.factor().solve(r)};
}

double energy(const CouplingSystem& system, const VortexConfig& n, double f, double kappa) {
    check_kappa(kappa);
    const auto currents = solve_currents(system, n, f);
    const auto q = system.energy_form().cast<double>();
    return 0.5 * kappa * bilinear(currents.values, q, currents.values);
}

double junction_sum_energy(const ArrayTopology& topology, const CurrentVector& currents, double kappa) {
    check_kappa(kappa);
    const auto& current = currents.values;
    if (current.size() != topology.size())
        throw Error(ErrorKind::Validation, "current vector does not match topology size");
    double total = 0.0;
    for (std::size_t p = 0; p < topology.size(); ++p) {
        total += topology.boundary_count(p) * current[p] * current[p];
        for (std::size_t q = 0; q < topology.size(); ++q) {
            const int shared = topology.shared_count(p, q);
            if (shared == 0) continue;
            const double drop = current[p] - current[q];
            total += shared * drop * drop;
        }
    }
    return 0.5 * kappa * total;
}

CurrentVector closed_form_currents_oracle(const ArrayTopology& topology, const VortexConfig& n, double f) {
    const auto reference = builtin_topology("triangle-stack-4");
    if (topology.plaquettes() != reference.plaquettes() || topology.links() != reference.links())
        throw Error(ErrorKind::Validation, "closed-form currents exist only for the ordinary triangle stack");
    if (n.size() != 4) throw Error(ErrorKind::Validation, "triangle stack needs 4 vortex numbers");

    const double g1 = n[0] - f;
    const double g2 = n[1] - f;
    const double g3 = n[2] - f;
    const double gc = n[3] - f;
    const double s = std::numbers::pi / 27.0;
    return {{
        s * (21 * g1 + 3 * g2 + 3 * g3 + 9 * gc),
        s * (3 * g1 + 21 * g2 + 3 * g3 + 9 * gc),
        s * (3 * g1 + 3 * g2 + 21 * g3 + 9 * gc),
        s * (9 * g1 + 9 * g2 + 9 * g3 + 27 * gc),
    }};
}

}  // namespace jjarray
