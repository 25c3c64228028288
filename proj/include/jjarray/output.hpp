#pragma once

#include "jjarray/landscape.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace jjarray::output {

enum class Format { Csv, Json, PlotData };

/// Throws Error(Validation) for anything but csv, json, plot-data.
Format parse_format(std::string_view name);

/// x rounded to 12 significant figures, shortest decimal form ("%.12g"),
/// with negative zero printed as "0".
std::string format_number(double x);

/// The double that format_number(x) denotes; JSON output uses it so CSV and
/// JSON carry identical values.
double round_number(double x);

/// "1;0;0;0"
std::string format_config(const VortexConfig& n);

struct SweepHeader {
    std::string topology;
    double kappa = 1.0;
};

/// CSV: header `f,config,energy,is_ground`, one row per (f, config).
void write_sweep_csv(std::ostream& os, const SweepTable& table);

/// {"topology", "kappa", "rows": [{"f", "config", "energy", "is_ground"}]}
void write_sweep_json(std::ostream& os, const SweepHeader& header, const SweepTable& table);

/// One block per configuration ("# config ..." then `f energy` lines),
/// blocks separated by a blank line.
void write_sweep_plot_data(std::ostream& os, const SweepTable& table);

void write_sweep(std::ostream& os, Format format, const SweepHeader& header, const SweepTable& table);

struct BranchReport {
    std::string topology;
    double kappa = 1.0;
    double f_min = 0.0;
    double f_max = 1.0;
    std::vector<LandscapeBranch> branches;
};

/// JSON object or CSV `config,a,b,c,vertex_f,multiplicity,ground_intervals`
/// with intervals as `lo:hi` joined by ';'. plot-data is rejected.
void write_branches(std::ostream& os, Format format, const BranchReport& report);

}  // namespace jjarray::output
