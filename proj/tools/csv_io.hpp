#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpulse/sweep.hpp"

namespace qpulse::cli {

// Shortest decimal that round-trips to the same double (17 significant
// digits at most). All numeric file output goes through this, which is what
// makes repeated runs byte-identical.
std::string format_double(double v);

struct CsvRow {
    std::string x_name;
    std::string y_name;
    double x = 0.0;
    double y = 0.0;
    std::string observable;
    std::optional<double> value;  // absent when status == "nonphysical"
    double s_norm = 0.0;
    std::string status;
};

inline constexpr const char* kCsvHeader =
    "x_name,y_name,x,y,observable,value,s_norm,status";

// One row per (cell, observable), LF endings, values via format_double.
void write_sweep_csv(std::ostream& out, const SweepGrid& grid);

// Strict reader for the same format; throws std::runtime_error on a wrong
// header or malformed row. Used by the round-trip checks.
std::vector<CsvRow> parse_sweep_csv(std::istream& in);

// Sidecar metadata: every knob that shaped the grid, so a result file is
// interpretable on its own.
nlohmann::json sweep_metadata(const SweepGrid& grid, const std::string& figure,
                              const std::vector<std::string>& assumptions);

// Plain-text gnuplot instructions referencing the CSV (one png per
// observable); keeps plotting out of the binary.
void write_gnuplot_script(std::ostream& out, const std::string& csv_path,
                          const SweepGrid& grid);

}  // namespace qpulse::cli
