#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jjarray {

/// One closed loop of the array. Every side carries a Josephson junction;
/// an odd number of π-junctions makes it a π-ring.
struct Plaquette {
    int id = 0;
    int junction_count = 0;
    int pi_junction_count = 0;

    friend bool operator==(const Plaquette&, const Plaquette&) = default;
};

/// `count` junctions shared between plaquettes `a` and `b` (by id).
struct SharedJunctionLink {
    int a = 0;
    int b = 0;
    int count = 0;

    friend bool operator==(const SharedJunctionLink&, const SharedJunctionLink&) = default;
};

/// Validated, canonical plaquette graph. Plaquettes are stored sorted by id;
/// their position in that order is the internal index used by every vector
/// and matrix downstream. Links are stored with a < b, sorted.
///
/// Construction enforces:
///   - positive unique ids, junction_count >= 1, 0 <= pi_junction_count <= junction_count
///   - links between distinct existing plaquettes, unique per pair, count >= 1
///   - boundary_count(p) = junction_count(p) - shared_total(p) >= 0
///   - every connected component has at least one boundary junction, which is
///     exactly the condition for the coupling matrix to be positive definite
class ArrayTopology {
public:
    /// Throws Error(Validation) or Error(Singular).
    static ArrayTopology create(std::string name, std::vector<Plaquette> plaquettes,
                                std::vector<SharedJunctionLink> links);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t size() const noexcept { return plaquettes_.size(); }
    [[nodiscard]] const std::vector<Plaquette>& plaquettes() const noexcept { return plaquettes_; }
    [[nodiscard]] const std::vector<SharedJunctionLink>& links() const noexcept { return links_; }

    /// Internal index of the plaquette with this id; throws Error(Validation) if absent.
    [[nodiscard]] std::size_t index_of(int id) const;

    [[nodiscard]] int junction_count(std::size_t index) const { return plaquettes_.at(index).junction_count; }
    [[nodiscard]] int shared_count(std::size_t i, std::size_t j) const;
    [[nodiscard]] int shared_total(std::size_t index) const;
    [[nodiscard]] int boundary_count(std::size_t index) const;

    /// pi_junction_count mod 2, per internal index.
    [[nodiscard]] std::vector<int> pi_parity() const;

    friend bool operator==(const ArrayTopology&, const ArrayTopology&) = default;

private:
    ArrayTopology() = default;

    std::string name_;
    std::vector<Plaquette> plaquettes_;
    std::vector<SharedJunctionLink> links_;
    std::vector<int> shared_;  // N×N shared-junction counts by internal index
};

/// Parses the JSON topology document:
///
///   { "name": "...",
///     "plaquettes": [ {"id": 1, "junctions": 3, "pi_junctions": 0}, ... ],
///     "shared":     [ {"a": 1, "b": 4, "count": 1}, ... ] }
///
/// `pi_junctions` defaults to 0 and `shared` to an empty list. Unknown keys
/// are rejected. Throws Error(Syntax) for malformed text or wrong types, and
/// the validation errors of ArrayTopology::create.
ArrayTopology parse_topology(std::string_view text);

/// Canonical JSON document for `topology`; parse_topology inverts it.
std::string serialize_topology(const ArrayTopology& topology);

/// Built-in names: triangle-stack-4, triangle-stack-4-pi, square-2x2,
/// square-2x2-checkerboard-pi, spin-star-5, spin-star-5-pi.
const std::vector<std::string>& builtin_topology_names();

/// Throws Error(Validation) for an unknown name.
ArrayTopology builtin_topology(std::string_view name);

/// Largest plaquette count accepted by the automorphism search.
inline constexpr std::size_t kMaxAutomorphismSize = 12;

/// Orbits of the plaquettes (internal indices) under graph automorphisms that
/// preserve junction count, π parity and link multiplicity. Each orbit is
/// sorted; orbits are ordered by their smallest member.
/// Throws Error(Validation) above kMaxAutomorphismSize plaquettes.
std::vector<std::vector<std::size_t>> automorphism_orbits(const ArrayTopology& topology);

/// Every such automorphism as a permutation `perm` with plaquette i mapped to
/// perm[i]. Enumerates the whole group, so limited to 8 plaquettes.
std::vector<std::vector<std::size_t>> automorphisms(const ArrayTopology& topology);

}  // namespace jjarray
