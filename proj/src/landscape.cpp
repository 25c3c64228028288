#include "jjarray/landscape.hpp"

#include "jjarray/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace jjarray {

namespace {

constexpr double kFourPiSquared = 4.0 * std::numbers::pi * std::numbers::pi;

/// Identical-line detection for parabola coefficients.
bool coefficients_equal(double x, double y) { return energies_equal(x, y); }

/// Groups of configurations sharing one parabola. All parabolas of a system
/// have the same curvature, so the envelope only depends on (b, c).
struct Line {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<std::size_t> members;  // indices into the branch list
    std::vector<FluxInterval> intervals;
};

std::vector<Line> group_identical(const std::vector<LandscapeBranch>& branches) {
    std::vector<std::size_t> order(branches.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return branches[i].quad.b < branches[j].quad.b;
    });

    std::vector<Line> lines;
    std::size_t start = 0;
    while (start < order.size()) {
        // run of equal slopes
        std::size_t end = start + 1;
        while (end < order.size() &&
               coefficients_equal(branches[order[end]].quad.b, branches[order[start]].quad.b))
            ++end;
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(start), order.begin() + static_cast<std::ptrdiff_t>(end),
                  [&](std::size_t i, std::size_t j) { return branches[i].quad.c < branches[j].quad.c; });
        for (std::size_t k = start; k < end;) {
            Line line;
            line.slope = branches[order[k]].quad.b;
            line.intercept = branches[order[k]].quad.c;
            std::size_t m = k;
            while (m < end && coefficients_equal(branches[order[m]].quad.c, line.intercept))
                line.members.push_back(order[m++]);
            std::sort(line.members.begin(), line.members.end());
            lines.push_back(std::move(line));
            k = m;
        }
        start = end;
    }
    return lines;
}

void add_point(Line& line, double f) {
    for (const auto& iv : line.intervals)
        if (iv.contains(f)) return;
    line.intervals.push_back({f, f});
}

}  // namespace

bool energies_equal(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

void EnumerationWindow::validate(std::size_t plaquettes) const {
    if (n_min > n_max)
        throw Error(ErrorKind::Validation, "enumeration window has n_min > n_max");
    const auto width = static_cast<std::size_t>(static_cast<long long>(n_max) - n_min + 1);
    std::size_t count = 1;
    for (std::size_t i = 0; i < plaquettes; ++i) {
        if (count > kMaxConfigurations / width)
            throw Error(ErrorKind::Validation, "enumeration window exceeds " + std::to_string(kMaxConfigurations) +
                                                   " configurations");
        count *= width;
    }
}

std::vector<VortexConfig> enumerate_configs(std::size_t plaquettes, const EnumerationWindow& window) {
    window.validate(plaquettes);
    std::vector<VortexConfig> out;
    std::vector<int> current(plaquettes, window.n_min);
    while (true) {
        out.emplace_back(current);
        // odometer, last entry fastest, gives lexicographic order
        std::size_t pos = plaquettes;
        while (pos > 0 && current[pos - 1] == window.n_max) {
            current[pos - 1] = window.n_min;
            --pos;
        }
        if (pos == 0) break;
        ++current[pos - 1];
    }
    return out;
}

LandscapeBranch parabola(const CouplingSystem& system, const VortexConfig& n, double kappa) {
    check_kappa(kappa);
    const auto h = reduced_frustration(system, n, 0.0);
    const std::vector<double> ones(system.size(), 1.0);
    const auto& w = system.flux_form();
    const double w11 = bilinear(ones, w, ones);
    const double w1h = bilinear(ones, w, h);
    const double whh = bilinear(h, w, h);

    LandscapeBranch branch;
    branch.config = n;
    branch.quad = {0.5 * kappa * kFourPiSquared * w11, -kappa * kFourPiSquared * w1h,
                   0.5 * kappa * kFourPiSquared * whh};
    branch.vertex_f = w1h / w11;
    return branch;
}

std::vector<double> FluxGrid::points() const {
    if (!(f_step > 0.0)) throw Error(ErrorKind::Validation, "flux step must be positive");
    if (!(f_min <= f_max)) throw Error(ErrorKind::Validation, "flux grid has f_min > f_max");
    const auto steps = static_cast<std::size_t>(std::floor((f_max - f_min) / f_step + 1e-9));
    std::vector<double> out;
    out.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) out.push_back(f_min + static_cast<double>(k) * f_step);
    return out;
}

SweepTable sweep(const CouplingSystem& system, const EnumerationWindow& window, const FluxGrid& grid,
                 double kappa) {
    check_kappa(kappa);
    const auto configs = enumerate_configs(system.size(), window);
    const auto fs = grid.points();

    SweepTable table;
    table.rows.reserve(configs.size() * fs.size());
    for (const double f : fs) {
        const auto first = table.rows.size();
        double lowest = std::numeric_limits<double>::infinity();
        for (const auto& n : configs) {
            const double e = energy(system, n, f, kappa);
            lowest = std::min(lowest, e);
            table.rows.push_back({f, n, e, false});
        }
        for (auto i = first; i < table.rows.size(); ++i)
            table.rows[i].is_ground = energies_equal(table.rows[i].energy, lowest);
    }
    return table;
}

std::vector<LandscapeBranch> ground_branches(const CouplingSystem& system, const EnumerationWindow& window,
                                             double f_lo, double f_hi, double kappa) {
    if (!(f_lo <= f_hi)) throw Error(ErrorKind::Validation, "flux range has f_lo > f_hi");
    const auto configs = enumerate_configs(system.size(), window);
    std::vector<LandscapeBranch> branches;
    branches.reserve(configs.size());
    for (const auto& n : configs) branches.push_back(parabola(system, n, kappa));

    const double curvature = branches.front().quad.a;
    auto lines = group_identical(branches);
    const auto energy_at = [&](const Line& l, double f) { return curvature * f * f + l.slope * f + l.intercept; };

    // Lines tied with the envelope at f, the one with the smallest slope first
    // (it stays lowest to the right of f).
    const auto tied_at = [&](double f) {
        double lowest = std::numeric_limits<double>::infinity();
        for (const auto& l : lines) lowest = std::min(lowest, energy_at(l, f));
        std::vector<std::size_t> tied;
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (energies_equal(energy_at(lines[i], f), lowest)) tied.push_back(i);
        std::sort(tied.begin(), tied.end(), [&](auto i, auto j) { return lines[i].slope < lines[j].slope; });
        return tied;
    };

    double x = f_lo;
    auto tied = tied_at(x);
    std::size_t current = tied.front();
    for (std::size_t k = 1; k < tied.size(); ++k) add_point(lines[tied[k]], x);

    while (true) {
        double next_x = std::numeric_limits<double>::infinity();
        std::size_t crossing_line = current;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            const auto& l = lines[i];
            if (!(l.slope < lines[current].slope)) continue;
            const double cross = (l.intercept - lines[current].intercept) / (lines[current].slope - l.slope);
            if (cross > x && (cross < next_x || (cross == next_x && l.slope < lines[crossing_line].slope))) {
                next_x = cross;
                crossing_line = i;
            }
        }
        if (next_x >= f_hi) {
            lines[current].intervals.push_back({x, f_hi});
            for (const auto i : tied_at(f_hi))
                if (i != current) add_point(lines[i], f_hi);
            break;
        }
        lines[current].intervals.push_back({x, next_x});
        tied = tied_at(next_x);
        std::size_t successor = tied.front();
        if (!(lines[successor].slope < lines[current].slope)) successor = crossing_line;
        for (const auto i : tied)
            if (i != current && i != successor) add_point(lines[i], next_x);
        current = successor;
        x = next_x;
    }

    std::vector<LandscapeBranch> out;
    for (auto& line : lines) {
        if (line.intervals.empty()) continue;
        std::sort(line.intervals.begin(), line.intervals.end(),
                  [](const auto& p, const auto& q) { return std::pair(p.lo, p.hi) < std::pair(q.lo, q.hi); });
        for (const auto m : line.members) {
            auto branch = branches[m];
            branch.ground_intervals = line.intervals;
            branch.multiplicity = line.members.size();
            out.push_back(std::move(branch));
        }
    }
    std::sort(out.begin(), out.end(), [](const LandscapeBranch& p, const LandscapeBranch& q) {
        const double pl = p.ground_intervals.front().lo;
        const double ql = q.ground_intervals.front().lo;
        if (pl != ql) return pl < ql;
        const bool pp = p.ground_intervals.front().is_point();
        const bool qp = q.ground_intervals.front().is_point();
        if (pp != qp) return pp;  // a point tie at x precedes the branch starting at x
        return p.config < q.config;
    });
    return out;
}

Crossings crossing(const LandscapeBranch& a, const LandscapeBranch& b) {
    const double da = a.quad.a - b.quad.a;
    const double db = a.quad.b - b.quad.b;
    const double dc = a.quad.c - b.quad.c;
    Crossings out;
    if (coefficients_equal(a.quad.a, b.quad.a) && coefficients_equal(a.quad.b, b.quad.b) &&
        coefficients_equal(a.quad.c, b.quad.c)) {
        out.degenerate_everywhere = true;
        return out;
    }
    if (coefficients_equal(a.quad.a, b.quad.a)) {
        if (!coefficients_equal(a.quad.b, b.quad.b)) out.roots.push_back(-dc / db);
        return out;
    }
    const double disc = db * db - 4.0 * da * dc;
    if (disc < 0.0) return out;
    if (disc == 0.0) {
        out.roots.push_back(-db / (2.0 * da));
        return out;
    }
    // numerically stable pair
    const double q = -0.5 * (db + std::copysign(std::sqrt(disc), db));
    out.roots = {q / da, dc / q};
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

std::vector<DegeneracyClass> degeneracy_classes(const CouplingSystem& system, const EnumerationWindow& window,
                                                double f, double kappa, double tol) {
    const auto configs = enumerate_configs(system.size(), window);
    std::vector<std::pair<double, VortexConfig>> scored;
    scored.reserve(configs.size());
    for (const auto& n : configs) scored.emplace_back(energy(system, n, f, kappa), n);
    std::sort(scored.begin(), scored.end());

    std::vector<DegeneracyClass> classes;
    for (auto& [e, n] : scored) {
        if (classes.empty() || !energies_equal(classes.back().energy, e, tol)) classes.push_back({e, {}});
        classes.back().configs.push_back(std::move(n));
    }
    for (auto& cls : classes) std::sort(cls.configs.begin(), cls.configs.end());
    return classes;
}

}  // namespace jjarray
