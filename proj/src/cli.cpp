#include "jjarray/cli.hpp"

#include "jjarray/error.hpp"
#include "jjarray/landscape.hpp"
#include "jjarray/output.hpp"
#include "jjarray/physical.hpp"
#include "jjarray/quadratic_core.hpp"
#include "jjarray/topology.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jjarray::cli {

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Io: return kExitIo;
        case ErrorKind::Singular:
        case ErrorKind::Numerical: return kExitNumerical;
        default: return kExitValidation;
    }
}

ArrayTopology load_topology(const std::string& source) {
    const auto& names = builtin_topology_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) return builtin_topology(source);
    std::ifstream in(source, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot read topology '" + source + "' (not a built-in name or readable file)");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_topology(text.str());
}

VortexConfig parse_config(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Syntax, "vortex configuration entry '" + item + "' is not an integer");
        }
    }
    if (values.empty()) throw Error(ErrorKind::Syntax, "empty vortex configuration");
    return VortexConfig(std::move(values));
}

std::string format_fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    std::string s(buf);
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

/// Writes to the --output path, or to `out` when it is empty or "-".
template <typename Writer>
void emit(const std::string& path, std::ostream& out, Writer&& write) {
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorKind::Io, "cannot open output file '" + path + "'");
    write(file);
    file.flush();
    if (!file) throw Error(ErrorKind::Io, "failed writing output file '" + path + "'");
}

struct GeometryOptions {
    physical::Params params;

    void attach(CLI::App& app) {
        app.add_option("--D", params.leg_length, "leg length D in meters")->capture_default_str();
        app.add_option("--a", params.leg_half_width, "leg half-width a in meters (drawn width is 2a)")
            ->capture_default_str();
        app.add_option("--m", params.legs, "legs per plaquette")->capture_default_str();
        app.add_option("--jc-scale", params.jc_scale, "critical current scale, I_c = jc_scale*a*D (A/m^2)")
            ->capture_default_str();
    }
};

/// --kappa VALUE | --physical (with geometry) | ideal 1.0
struct KappaOptions {
    std::optional<double> explicit_kappa;
    bool from_physical = false;
    GeometryOptions geometry;

    void attach(CLI::App& app) {
        auto* k = app.add_option("--kappa", explicit_kappa, "energy prefactor in (0, 1]; default 1");
        auto* p = app.add_flag("--physical", from_physical, "derive kappa from the plaquette geometry");
        k->excludes(p);
        geometry.attach(app);
    }

    [[nodiscard]] double resolve() const {
        double kappa = 1.0;
        if (explicit_kappa) {
            kappa = *explicit_kappa;
        } else if (from_physical) {
            const double l = physical::leg_self_inductance(geometry.params);
            kappa = physical::energy_prefactor(l, physical::critical_current(geometry.params));
        }
        check_kappa(kappa);
        return kappa;
    }
};

struct WindowOptions {
    EnumerationWindow window;

    void attach(CLI::App& app) {
        app.add_option("--n-min", window.n_min, "smallest vortex number per plaquette")->capture_default_str();
        app.add_option("--n-max", window.n_max, "largest vortex number per plaquette")->capture_default_str();
    }
};

void check_range(double f_min, double f_max) {
    if (!(f_min < f_max)) throw Error(ErrorKind::Validation, "--f-min must be smaller than --f-max");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Energy landscapes of Josephson-junction plaquette arrays in the harmonic approximation",
                 "jjarray"};
    app.require_subcommand(1);

    std::string topology_source;
    std::string sweep_output;
    std::string sweep_format;
    std::string branches_output;
    std::string branches_format;
    std::string config_text;
    double f = 0.0;
    double f_min = 0.0;
    double f_max = 1.0;
    double f_step = 0.01;

    auto* sweep_cmd = app.add_subcommand("sweep", "energy of every configuration on a flux grid");
    sweep_cmd->add_option("--topology", topology_source, "built-in name or topology document path")->required();
    sweep_cmd->add_option("--f-min", f_min, "first flux value (units of the flux quantum)")->capture_default_str();
    sweep_cmd->add_option("--f-max", f_max, "last flux value")->capture_default_str();
    sweep_cmd->add_option("--f-step", f_step, "flux step")->capture_default_str();
    sweep_cmd->add_option("--format", sweep_format, "csv | json | plot-data")->default_val("csv");
    sweep_cmd->add_option("--output", sweep_output, "output file, '-' for stdout")->default_val("-");
    KappaOptions sweep_kappa;
    sweep_kappa.attach(*sweep_cmd);
    WindowOptions sweep_window;
    sweep_window.attach(*sweep_cmd);

    auto* currents_cmd = app.add_subcommand("currents", "circulating currents of one configuration");
    currents_cmd->add_option("--topology", topology_source, "built-in name or topology document path")->required();
    currents_cmd->add_option("--n", config_text, "vortex numbers, comma separated")->required();
    currents_cmd->add_option("--f", f, "applied flux")->capture_default_str();

    auto* energy_cmd = app.add_subcommand("energy", "energy of one configuration in units of E_J");
    energy_cmd->add_option("--topology", topology_source, "built-in name or topology document path")->required();
    energy_cmd->add_option("--n", config_text, "vortex numbers, comma separated")->required();
    energy_cmd->add_option("--f", f, "applied flux")->capture_default_str();
    KappaOptions energy_kappa;
    energy_kappa.attach(*energy_cmd);

    auto* branches_cmd = app.add_subcommand("branches", "ground-state branches over a flux range");
    branches_cmd->add_option("--topology", topology_source, "built-in name or topology document path")->required();
    branches_cmd->add_option("--f-min", f_min, "range start")->capture_default_str();
    branches_cmd->add_option("--f-max", f_max, "range end")->capture_default_str();
    branches_cmd->add_option("--format", branches_format, "json | csv")->default_val("json");
    branches_cmd->add_option("--output", branches_output, "output file, '-' for stdout")->default_val("-");
    KappaOptions branches_kappa;
    branches_kappa.attach(*branches_cmd);
    WindowOptions branches_window;
    branches_window.attach(*branches_cmd);

    auto* vertex_cmd = app.add_subcommand("vertex", "flux at the minimum of a configuration's parabola");
    vertex_cmd->add_option("--topology", topology_source, "built-in name or topology document path")->required();
    vertex_cmd->add_option("--n", config_text, "vortex numbers, comma separated")->required();

    auto* inductance_cmd = app.add_subcommand("inductance", "plaquette self-inductance");
    GeometryOptions inductance_geometry;
    inductance_geometry.attach(*inductance_cmd);

    auto* params_cmd = app.add_subcommand("params", "inductance, critical current, E_J and kappa");
    GeometryOptions params_geometry;
    params_geometry.attach(*params_cmd);

    auto* list_cmd = app.add_subcommand("list-topologies", "names of the built-in topologies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error[usage]: " << msg << '\n';
        return kExitValidation;
    }

    try {
        if (*sweep_cmd) {
            check_range(f_min, f_max);
            const auto format = output::parse_format(sweep_format);
            const double kappa = sweep_kappa.resolve();
            const auto topology = load_topology(topology_source);
            const auto system = assemble(topology);
            const auto table = sweep(system, sweep_window.window, FluxGrid{f_min, f_max, f_step}, kappa);
            emit(sweep_output, out,
                 [&](std::ostream& os) { output::write_sweep(os, format, {topology.name(), kappa}, table); });
        } else if (*currents_cmd) {
            const auto topology = load_topology(topology_source);
            const auto system = assemble(topology);
            const auto currents = solve_currents(system, parse_config(config_text), f);
            for (std::size_t i = 0; i < currents.values.size(); ++i)
                out << (i ? ", " : "") << format_fixed12(currents.values[i]);
            out << '\n';
        } else if (*energy_cmd) {
            const double kappa = energy_kappa.resolve();
            const auto topology = load_topology(topology_source);
            const auto system = assemble(topology);
            out << output::format_number(energy(system, parse_config(config_text), f, kappa)) << '\n';
        } else if (*branches_cmd) {
            check_range(f_min, f_max);
            const auto format = output::parse_format(branches_format);
            const double kappa = branches_kappa.resolve();
            const auto topology = load_topology(topology_source);
            const auto system = assemble(topology);
            output::BranchReport report{topology.name(), kappa, f_min, f_max,
                                        ground_branches(system, branches_window.window, f_min, f_max, kappa)};
            emit(branches_output, out, [&](std::ostream& os) { output::write_branches(os, format, report); });
        } else if (*vertex_cmd) {
            const auto topology = load_topology(topology_source);
            const auto system = assemble(topology);
            out << output::format_number(parabola(system, parse_config(config_text), 1.0).vertex_f) << '\n';
        } else if (*inductance_cmd) {
            const double l = physical::leg_self_inductance(inductance_geometry.params);
            out << "L_H=" << output::format_number(l) << '\n';
        } else if (*params_cmd) {
            const auto& p = params_geometry.params;
            const double l = physical::leg_self_inductance(p);
            const double ic = physical::critical_current(p);
            const double ej = physical::josephson_energy(ic);
            const double kappa = physical::energy_prefactor(l, ic);
            out << "L_H=" << output::format_number(l) << '\n'
                << "I_c_A=" << output::format_number(ic) << '\n'
                << "E_J_J=" << output::format_number(ej) << '\n'
                << "kappa=" << output::format_number(kappa) << '\n'
                << "magnetic_fraction=" << output::format_number(1.0 - kappa) << '\n';
        } else if (*list_cmd) {
            for (const auto& name : builtin_topology_names()) out << name << '\n';
        }
    } catch (const Error& e) {
        err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error[numerical]: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace jjarray::cli
