// Invariants of the energy landscape, checked on every built-in topology.

#include "jjarray/landscape.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace jjarray;

namespace {

constexpr int kSamples = 150;

struct Sample {
    VortexConfig n;
    double f;
    double kappa;
};

Sample draw(std::mt19937_64& rng, std::size_t size) {
    std::uniform_real_distribution<double> fd(-3.0, 3.0);
    std::uniform_real_distribution<double> kd(0.01, 1.0);
    auto n = oracle::random_config(rng, size, -3, 3);
    return {std::move(n), fd(rng), kd(rng)};
}

bool close(double x, double y, double rel = 1e-12) { return std::abs(x - y) <= rel * std::max(1.0, std::abs(y)); }

std::vector<VortexConfig> ground_at(const std::vector<LandscapeBranch>& branches, double f) {
    std::vector<VortexConfig> out;
    for (const auto& b : branches)
        for (const auto& iv : b.ground_intervals)
            if (iv.contains(f)) {
                out.push_back(b.config);
                break;
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("quadratic form and junction sum agree", "[property]") {
    std::mt19937_64 rng(1);
    for (const auto& name : builtin_topology_names()) {
        const auto t = builtin_topology(name);
        const auto sys = assemble(t);
        for (int i = 0; i < kSamples; ++i) {
            const auto s = draw(rng, t.size());
            const double e = energy(sys, s.n, s.f, s.kappa);
            CHECK(close(junction_sum_energy(t, solve_currents(sys, s.n, s.f), s.kappa), e));
            CHECK(close(oracle::junction_walk_energy(t, s.n, s.f, s.kappa), e, 1e-11));
        }
    }
}

TEST_CASE("energy is non-negative and vanishes only at zero drive", "[property]") {
    std::mt19937_64 rng(2);
    for (const auto& name : builtin_topology_names()) {
        const auto sys = assemble(builtin_topology(name));
        for (int i = 0; i < kSamples; ++i) {
            const auto s = draw(rng, sys.size());
            CHECK(energy(sys, s.n, s.f, s.kappa) >= 0.0);
        }
        // zero drive when every plaquette has the same parity p and f = -p/2
        const auto& parity = sys.parity();
        if (std::adjacent_find(parity.begin(), parity.end(), std::not_equal_to<>()) == parity.end()) {
            const VortexConfig zero(std::vector<int>(sys.size(), 0));
            CHECK(energy(sys, zero, -0.5 * parity[0], 1.0) == Catch::Approx(0.0).margin(1e-24));
        }
    }
}

TEST_CASE("shifting every vortex number and the flux by one changes nothing", "[property]") {
    std::mt19937_64 rng(3);
    for (const auto& name : builtin_topology_names()) {
        const auto sys = assemble(builtin_topology(name));
        for (int i = 0; i < kSamples; ++i) {
            const auto s = draw(rng, sys.size());
            const int k = static_cast<int>(rng() % 5) - 2;
            CHECK(close(energy(sys, s.n.shifted(k), s.f + k, s.kappa), energy(sys, s.n, s.f, s.kappa), 1e-10));
        }
    }
}

TEST_CASE("mirror symmetry", "[property]") {
    // E(n, f) = E(P - n, -f); with no π-junctions this is E(-n, -f)
    std::mt19937_64 rng(4);
    for (const auto& name : builtin_topology_names()) {
        const auto sys = assemble(builtin_topology(name));
        for (int i = 0; i < kSamples; ++i) {
            const auto s = draw(rng, sys.size());
            std::vector<int> mirrored(sys.size());
            for (std::size_t p = 0; p < sys.size(); ++p) mirrored[p] = sys.parity()[p] - s.n[p];
            CHECK(close(energy(sys, VortexConfig(mirrored), -s.f, s.kappa), energy(sys, s.n, s.f, s.kappa), 1e-10));
            if (std::all_of(sys.parity().begin(), sys.parity().end(), [](int p) { return p == 0; }))
                CHECK(close(energy(sys, s.n.negated(), -s.f, s.kappa), energy(sys, s.n, s.f, s.kappa), 1e-10));
        }
    }
}

TEST_CASE("energy is invariant under plaquette automorphisms", "[property]") {
    std::mt19937_64 rng(5);
    for (const auto& name : builtin_topology_names()) {
        const auto t = builtin_topology(name);
        const auto sys = assemble(t);
        const auto group = automorphisms(t);
        REQUIRE(group.size() >= 2);
        for (int i = 0; i < kSamples; ++i) {
            const auto s = draw(rng, t.size());
            const double e = energy(sys, s.n, s.f, s.kappa);
            for (const auto& perm : group) CHECK(close(energy(sys, s.n.permuted(perm), s.f, s.kappa), e, 1e-10));
        }
    }
}

TEST_CASE("a pi-junction in every plaquette shifts the landscape by half a quantum", "[property]") {
    std::mt19937_64 rng(6);
    for (const auto& [plain, shifted] : {std::pair{"triangle-stack-4", "triangle-stack-4-pi"},
                                         std::pair{"spin-star-5", "spin-star-5-pi"}}) {
        const auto a = assemble(builtin_topology(plain));
        const auto b = assemble(builtin_topology(shifted));
        for (int i = 0; i < kSamples; ++i) {
            const auto s = draw(rng, a.size());
            CHECK(close(energy(b, s.n, s.f, s.kappa), energy(a, s.n, s.f + 0.5, s.kappa), 1e-10));
        }
    }
}

TEST_CASE("grid sweep agrees with the analytic envelope", "[property]") {
    const EnumerationWindow window{0, 1};
    for (const auto& name : builtin_topology_names()) {
        const auto sys = assemble(builtin_topology(name));
        const auto branches = ground_branches(sys, window, 0.0, 1.0, 0.8);
        const auto table = sweep(sys, window, {0.003, 0.997, 0.01}, 0.8);
        std::map<double, std::vector<VortexConfig>> grid_ground;
        for (const auto& row : table.rows) {
            CHECK(close(parabola(sys, row.config, 0.8).quad(row.f), row.energy, 1e-11));
            if (row.is_ground) grid_ground[row.f].push_back(row.config);
        }
        REQUIRE(grid_ground.size() == 100);
        for (const auto& [f, configs] : grid_ground) CHECK(configs == ground_at(branches, f));
    }
}

TEST_CASE("ground intervals match a brute-force scan", "[property]") {
    const EnumerationWindow window{0, 1};
    for (const auto& name : builtin_topology_names()) {
        const auto t = builtin_topology(name);
        const auto branches = ground_branches(assemble(t), window, 0.0, 1.0, 1.0);
        const auto runs = oracle::scan_intervals(t, window, 0.0, 1.0, 1e-3, 1.0);

        // every run on the grid sits inside an analytic interval, and every
        // analytic interval wider than the grid shows up as a run
        for (const auto& [config, rs] : runs) {
            const auto it = std::find_if(branches.begin(), branches.end(),
                                         [&](const auto& b) { return b.config == config; });
            REQUIRE(it != branches.end());
            for (const auto& [lo, hi] : rs) {
                const bool inside = std::any_of(it->ground_intervals.begin(), it->ground_intervals.end(),
                                                [&](const auto& iv) { return iv.lo - 2e-3 <= lo && hi <= iv.hi + 2e-3; });
                CHECK(inside);
            }
        }
        for (const auto& b : branches)
            for (const auto& iv : b.ground_intervals) {
                if (iv.hi - iv.lo < 5e-3) continue;
                const auto r = runs.find(b.config);
                REQUIRE(r != runs.end());
                const bool seen = std::any_of(r->second.begin(), r->second.end(), [&](const auto& run) {
                    return std::abs(run.first - iv.lo) <= 2e-3 && std::abs(run.second - iv.hi) <= 2e-3;
                });
                CHECK(seen);
            }

        // the non-degenerate pieces tile [0, 1]
        std::vector<FluxInterval> pieces;
        for (const auto& b : branches)
            for (const auto& iv : b.ground_intervals)
                if (!iv.is_point()) pieces.push_back(iv);
        // degenerate branches repeat the same piece
        std::sort(pieces.begin(), pieces.end(),
                  [](const auto& x, const auto& y) { return std::pair{x.lo, x.hi} < std::pair{y.lo, y.hi}; });
        pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
        REQUIRE_FALSE(pieces.empty());
        CHECK(pieces.front().lo == 0.0);
        CHECK(pieces.back().hi == 1.0);
        for (std::size_t i = 1; i < pieces.size(); ++i)
            CHECK(std::abs(pieces[i].lo - pieces[i - 1].hi) <= 1e-12 * std::max(1.0, std::abs(pieces[i].lo)));
    }
}

TEST_CASE("the ground envelope is periodic in the flux", "[property]") {
    const EnumerationWindow window{-2, 2};
    for (const auto& name : builtin_topology_names()) {
        const auto sys = assemble(builtin_topology(name));
        const auto branches = ground_branches(sys, window, -1.0, 1.0, 1.0);
        for (int k = 0; k < 40; ++k) {
            const double f = -1.0 + 0.013 + k / 41.0;
            const auto here = ground_at(branches, f);
            const auto there = ground_at(branches, f + 1.0);
            REQUIRE_FALSE(here.empty());
            std::vector<VortexConfig> shifted;
            for (const auto& c : here) shifted.push_back(c.shifted(1));
            std::sort(shifted.begin(), shifted.end());
            CHECK(shifted == there);
            CHECK(close(energy(sys, here.front(), f, 1.0), energy(sys, there.front(), f + 1.0, 1.0), 1e-10));
        }
    }
}

TEST_CASE("degeneracy classes are unions of symmetry images", "[property]") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> fd(-1.0, 1.0);
    for (const auto& name : builtin_topology_names()) {
        const auto t = builtin_topology(name);
        const auto sys = assemble(t);
        const auto group = automorphisms(t);
        for (int trial = 0; trial < 5; ++trial) {
            const double f = fd(rng);
            const auto classes = degeneracy_classes(sys, {-1, 1}, f, 1.0);
            std::size_t total = 0;
            for (const auto& cls : classes) {
                total += cls.configs.size();
                const std::set<VortexConfig> members(cls.configs.begin(), cls.configs.end());
                for (const auto& c : cls.configs)
                    for (const auto& perm : group) CHECK(members.count(c.permuted(perm)) == 1);
            }
            CHECK(total == enumerate_configs(t.size(), {-1, 1}).size());
        }
    }
}
