#include "jjarray/output.hpp"

#include "jjarray/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>

namespace jjarray::output {

using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    if (name == "plot-data") return Format::PlotData;
    throw Error(ErrorKind::Validation, "unknown output format '" + std::string(name) + "'");
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

double round_number(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

std::string format_config(const VortexConfig& n) {
    std::string s;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(n[i]);
    }
    return s;
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
    os << "f,config,energy,is_ground\n";
    for (const auto& row : table.rows)
        os << format_number(row.f) << ',' << format_config(row.config) << ',' << format_number(row.energy) << ','
           << (row.is_ground ? 1 : 0) << '\n';
}

void write_sweep_json(std::ostream& os, const SweepHeader& header, const SweepTable& table) {
    ordered_json doc;
    doc["topology"] = header.topology;
    doc["kappa"] = round_number(header.kappa);
    auto& rows = doc["rows"] = ordered_json::array();
    for (const auto& row : table.rows) {
        ordered_json r;
        r["f"] = round_number(row.f);
        r["config"] = std::vector<int>(row.config.values().begin(), row.config.values().end());
        r["energy"] = round_number(row.energy);
        r["is_ground"] = row.is_ground;
        rows.push_back(std::move(r));
    }
    os << doc.dump(1) << '\n';
}

void write_sweep_plot_data(std::ostream& os, const SweepTable& table) {
    std::map<VortexConfig, std::vector<const SweepRow*>> blocks;
    for (const auto& row : table.rows) blocks[row.config].push_back(&row);
    bool first = true;
    for (const auto& [config, rows] : blocks) {
        if (!first) os << '\n';
        first = false;
        os << "# config " << format_config(config) << '\n';
        for (const auto* row : rows) os << format_number(row->f) << ' ' << format_number(row->energy) << '\n';
    }
}

void write_sweep(std::ostream& os, Format format, const SweepHeader& header, const SweepTable& table) {
    switch (format) {
        case Format::Csv: write_sweep_csv(os, table); break;
        case Format::Json: write_sweep_json(os, header, table); break;
        case Format::PlotData: write_sweep_plot_data(os, table); break;
    }
}

void write_branches(std::ostream& os, Format format, const BranchReport& report) {
    if (format == Format::PlotData)
        throw Error(ErrorKind::Validation, "branch report supports csv and json only");
    if (format == Format::Csv) {
        os << "config,a,b,c,vertex_f,multiplicity,ground_intervals\n";
        for (const auto& br : report.branches) {
            os << format_config(br.config) << ',' << format_number(br.quad.a) << ',' << format_number(br.quad.b)
               << ',' << format_number(br.quad.c) << ',' << format_number(br.vertex_f) << ',' << br.multiplicity
               << ',';
            for (std::size_t i = 0; i < br.ground_intervals.size(); ++i) {
                if (i) os << ';';
                os << format_number(br.ground_intervals[i].lo) << ':' << format_number(br.ground_intervals[i].hi);
            }
            os << '\n';
        }
        return;
    }
    ordered_json doc;
    doc["topology"] = report.topology;
    doc["kappa"] = round_number(report.kappa);
    doc["f_min"] = round_number(report.f_min);
    doc["f_max"] = round_number(report.f_max);
    auto& list = doc["branches"] = ordered_json::array();
    for (const auto& br : report.branches) {
        ordered_json b;
        b["config"] = std::vector<int>(br.config.values().begin(), br.config.values().end());
        b["quad"] = {{"a", round_number(br.quad.a)}, {"b", round_number(br.quad.b)}, {"c", round_number(br.quad.c)}};
        b["vertex_f"] = round_number(br.vertex_f);
        b["multiplicity"] = br.multiplicity;
        auto& ivs = b["ground_intervals"] = ordered_json::array();
        for (const auto& iv : br.ground_intervals) ivs.push_back({round_number(iv.lo), round_number(iv.hi)});
        list.push_back(std::move(b));
    }
    os << doc.dump(1) << '\n';
}

}  // namespace jjarray::output
