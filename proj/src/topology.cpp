#include "jjarray/topology.hpp"

#include "jjarray/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace jjarray {

namespace {

using nlohmann::json;

[[noreturn]] void fail_validation(const std::string& what) { throw Error(ErrorKind::Validation, what); }
[[noreturn]] void fail_syntax(const std::string& what) { throw Error(ErrorKind::Syntax, what); }

int get_int(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail_syntax(where + ": missing key '" + key + "'");
    if (!it->is_number_integer()) fail_syntax(where + ": '" + key + "' must be an integer");
    const auto v = it->get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        fail_syntax(where + ": '" + key + "' out of range");
    return static_cast<int>(v);
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            fail_syntax(where + ": unknown key '" + key + "'");
    }
}

}  // namespace

ArrayTopology ArrayTopology::create(std::string name, std::vector<Plaquette> plaquettes,
                                    std::vector<SharedJunctionLink> links) {
    if (plaquettes.empty()) fail_validation("topology has no plaquettes");

    std::sort(plaquettes.begin(), plaquettes.end(),
              [](const Plaquette& x, const Plaquette& y) { return x.id < y.id; });
    for (std::size_t i = 0; i < plaquettes.size(); ++i) {
        const auto& p = plaquettes[i];
        const auto tag = "plaquette " + std::to_string(p.id);
        if (p.id <= 0) fail_validation(tag + ": id must be positive");
        if (i > 0 && plaquettes[i - 1].id == p.id) fail_validation(tag + ": duplicate id");
        if (p.junction_count < 1) fail_validation(tag + ": junction count must be >= 1");
        if (p.pi_junction_count < 0) fail_validation(tag + ": negative pi-junction count");
        if (p.pi_junction_count > p.junction_count)
            fail_validation(tag + ": more pi-junctions than junctions");
    }

    ArrayTopology t;
    t.name_ = std::move(name);
    t.plaquettes_ = std::move(plaquettes);
    const std::size_t n = t.plaquettes_.size();
    t.shared_.assign(n * n, 0);

    for (auto& link : links) {
        const auto tag = "link " + std::to_string(link.a) + "-" + std::to_string(link.b);
        if (link.a == link.b) fail_validation(tag + ": a plaquette cannot share junctions with itself");
        if (link.count < 1) fail_validation(tag + ": shared count must be >= 1");
        if (link.a > link.b) std::swap(link.a, link.b);
        const auto i = t.index_of(link.a);
        const auto j = t.index_of(link.b);
        if (t.shared_[i * n + j] != 0) fail_validation(tag + ": duplicate link");
        t.shared_[i * n + j] = link.count;
        t.shared_[j * n + i] = link.count;
    }
    std::sort(links.begin(), links.end(), [](const auto& x, const auto& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    t.links_ = std::move(links);

    for (std::size_t i = 0; i < n; ++i)
        if (t.boundary_count(i) < 0)
            fail_validation("plaquette " + std::to_string(t.plaquettes_[i].id) +
                            ": shares more junctions than it has");

    // Each connected component needs a boundary junction, otherwise the
    // coupling matrix restricted to it is a pure Laplacian (singular).
    std::vector<int> component(n, -1);
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (component[seed] >= 0) continue;
        std::vector<std::size_t> stack{seed};
        std::vector<std::size_t> members;
        component[seed] = static_cast<int>(seed);
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (std::size_t v = 0; v < n; ++v)
                if (t.shared_[u * n + v] > 0 && component[v] < 0) {
                    component[v] = static_cast<int>(seed);
                    stack.push_back(v);
                }
        }
        if (std::none_of(members.begin(), members.end(), [&](auto u) { return t.boundary_count(u) > 0; }))
            throw Error(ErrorKind::Singular,
                        "component containing plaquette " + std::to_string(t.plaquettes_[seed].id) +
                            " has no boundary junction; coupling matrix is singular");
    }
    return t;
}

std::size_t ArrayTopology::index_of(int id) const {
    const auto it = std::lower_bound(plaquettes_.begin(), plaquettes_.end(), id,
                                     [](const Plaquette& p, int v) { return p.id < v; });
    if (it == plaquettes_.end() || it->id != id) fail_validation("unknown plaquette id " + std::to_string(id));
    return static_cast<std::size_t>(it - plaquettes_.begin());
}

int ArrayTopology::shared_count(std::size_t i, std::size_t j) const {
    return shared_.at(i * size() + j);
}

int ArrayTopology::shared_total(std::size_t index) const {
    int total = 0;
    for (std::size_t j = 0; j < size(); ++j) total += shared_count(index, j);
    return total;
}

int ArrayTopology::boundary_count(std::size_t index) const {
    return junction_count(index) - shared_total(index);
}

std::vector<int> ArrayTopology::pi_parity() const {
    std::vector<int> parity;
    parity.reserve(size());
    for (const auto& p : plaquettes_) parity.push_back(p.pi_junction_count % 2);
    return parity;
}

ArrayTopology parse_topology(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail_syntax(std::string("topology document: ") + e.what());
    }
    if (!doc.is_object()) fail_syntax("topology document: top level must be an object");
    reject_unknown_keys(doc, {"name", "plaquettes", "shared"}, "topology document");

    const auto name_it = doc.find("name");
    if (name_it == doc.end() || !name_it->is_string()) fail_syntax("topology document: 'name' must be a string");

    const auto pl_it = doc.find("plaquettes");
    if (pl_it == doc.end() || !pl_it->is_array()) fail_syntax("topology document: 'plaquettes' must be an array");

    std::vector<Plaquette> plaquettes;
    for (std::size_t k = 0; k < pl_it->size(); ++k) {
        const auto& obj = (*pl_it)[k];
        const auto where = "plaquettes[" + std::to_string(k) + "]";
        if (!obj.is_object()) fail_syntax(where + ": must be an object");
        reject_unknown_keys(obj, {"id", "junctions", "pi_junctions"}, where);
        Plaquette p;
        p.id = get_int(obj, "id", where);
        p.junction_count = get_int(obj, "junctions", where);
        p.pi_junction_count = obj.contains("pi_junctions") ? get_int(obj, "pi_junctions", where) : 0;
        plaquettes.push_back(p);
    }

    std::vector<SharedJunctionLink> links;
    if (const auto sh_it = doc.find("shared"); sh_it != doc.end()) {
        if (!sh_it->is_array()) fail_syntax("topology document: 'shared' must be an array");
        for (std::size_t k = 0; k < sh_it->size(); ++k) {
            const auto& obj = (*sh_it)[k];
            const auto where = "shared[" + std::to_string(k) + "]";
            if (!obj.is_object()) fail_syntax(where + ": must be an object");
            reject_unknown_keys(obj, {"a", "b", "count"}, where);
            links.push_back({get_int(obj, "a", where), get_int(obj, "b", where), get_int(obj, "count", where)});
        }
    }

    return ArrayTopology::create(name_it->get<std::string>(), std::move(plaquettes), std::move(links));
}

std::string serialize_topology(const ArrayTopology& topology) {
    json doc;
    doc["name"] = topology.name();
    doc["plaquettes"] = json::array();
    for (const auto& p : topology.plaquettes())
        doc["plaquettes"].push_back({{"id", p.id}, {"junctions", p.junction_count}, {"pi_junctions", p.pi_junction_count}});
    doc["shared"] = json::array();
    for (const auto& l : topology.links()) doc["shared"].push_back({{"a", l.a}, {"b", l.b}, {"count", l.count}});
    return doc.dump(2) + "\n";
}

const std::vector<std::string>& builtin_topology_names() {
    static const std::vector<std::string> names{
        "triangle-stack-4", "triangle-stack-4-pi", "square-2x2",
        "square-2x2-checkerboard-pi", "spin-star-5", "spin-star-5-pi",
    };
    return names;
}

ArrayTopology builtin_topology(std::string_view name) {
    // Triangle stack: outer triangles 1-3 each share one junction with the
    // central triangle 4, which therefore has no boundary junction.
    if (name == "triangle-stack-4" || name == "triangle-stack-4-pi") {
        const int pi = name.ends_with("-pi") ? 1 : 0;
        return ArrayTopology::create(std::string(name), {{1, 3, pi}, {2, 3, pi}, {3, 3, pi}, {4, 3, pi}},
                                     {{1, 4, 1}, {2, 4, 1}, {3, 4, 1}});
    }
    // 2x2 square grid, laid out as
    //   1 2
    //   3 4
    // In the checkerboard variant the diagonal squares 1 and 4 are π-rings and
    // the off-diagonal ones carry an even number (two) of π-junctions.
    if (name == "square-2x2" || name == "square-2x2-checkerboard-pi") {
        const bool pi = name.ends_with("-pi");
        return ArrayTopology::create(std::string(name),
                                     {{1, 4, pi ? 1 : 0}, {2, 4, pi ? 2 : 0}, {3, 4, pi ? 2 : 0}, {4, 4, pi ? 1 : 0}},
                                     {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 1}});
    }
    // Spin star: central square 5 with corner squares 1-4 touching it at its
    // vertices only, so no junction is shared.
    if (name == "spin-star-5" || name == "spin-star-5-pi") {
        const int pi = name.ends_with("-pi") ? 1 : 0;
        return ArrayTopology::create(std::string(name), {{1, 4, pi}, {2, 4, pi}, {3, 4, pi}, {4, 4, pi}, {5, 4, pi}},
                                     {});
    }
    throw Error(ErrorKind::Validation, "unknown built-in topology '" + std::string(name) + "'");
}

namespace {

/// Backtracking search for plaquette permutations preserving the coloured
/// multigraph. Vertices are assigned in `order`; `visit` returns false to stop.
class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const ArrayTopology& t) : t_(t), n_(t.size()) {
        const auto parity = t.pi_parity();
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<int> sig{t.junction_count(i), parity[i]};
            std::vector<int> incident;
            for (std::size_t j = 0; j < n_; ++j)
                if (j != i) incident.push_back(t.shared_count(i, j));
            std::sort(incident.begin(), incident.end());
            sig.insert(sig.end(), incident.begin(), incident.end());
            signature_.push_back(std::move(sig));
        }
    }

    /// Runs the search with `forced` (if any) pinned: perm[from] = to.
    void run(std::optional<std::pair<std::size_t, std::size_t>> forced,
             const std::function<bool(const std::vector<std::size_t>&)>& visit) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        perm_.assign(n_, kUnset);
        used_.assign(n_, false);
        if (forced) {
            std::swap(order_[0], order_[forced->first]);
            forced_ = forced;
        } else {
            forced_.reset();
        }
        visit_ = &visit;
        recurse(0);
    }

private:
    static constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

    bool compatible(std::size_t u, std::size_t image) const {
        if (signature_[u] != signature_[image]) return false;
        for (std::size_t v = 0; v < n_; ++v)
            if (perm_[v] != kUnset && t_.shared_count(u, v) != t_.shared_count(image, perm_[v])) return false;
        return true;
    }

    bool recurse(std::size_t depth) {
        if (depth == n_) return (*visit_)(perm_);
        const auto u = order_[depth];
        for (std::size_t image = 0; image < n_; ++image) {
            if (depth == 0 && forced_ && image != forced_->second) continue;
            if (used_[image] || !compatible(u, image)) continue;
            perm_[u] = image;
            used_[image] = true;
            const bool keep_going = recurse(depth + 1);
            perm_[u] = kUnset;
            used_[image] = false;
            if (!keep_going) return false;
        }
        return true;
    }

    const ArrayTopology& t_;
    std::size_t n_;
    std::vector<std::vector<int>> signature_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> perm_;
    std::vector<bool> used_;
    std::optional<std::pair<std::size_t, std::size_t>> forced_;
    const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
};

}  // namespace

std::vector<std::vector<std::size_t>> automorphism_orbits(const ArrayTopology& topology) {
    const auto n = topology.size();
    if (n > kMaxAutomorphismSize)
        fail_validation("automorphism search limited to " + std::to_string(kMaxAutomorphismSize) + " plaquettes");

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };

    AutomorphismSearch search(topology);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            search.run(std::pair{i, j}, [&](const std::vector<std::size_t>& perm) {
                // every cycle of a found automorphism lies inside one orbit
                for (std::size_t k = 0; k < n; ++k) parent[find(k)] = find(perm[k]);
                return false;
            });
        }

    std::map<std::size_t, std::vector<std::size_t>> grouped;
    for (std::size_t i = 0; i < n; ++i) grouped[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> orbits;
    for (auto& [root, members] : grouped) orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

std::vector<std::vector<std::size_t>> automorphisms(const ArrayTopology& topology) {
    if (topology.size() > 8) fail_validation("full automorphism enumeration limited to 8 plaquettes");
    std::vector<std::vector<std::size_t>> out;
    AutomorphismSearch search(topology);
    search.run(std::nullopt, [&](const std::vector<std::size_t>& perm) {
        out.push_back(perm);
        return true;
    });
    return out;
}

}  // namespace jjarray
