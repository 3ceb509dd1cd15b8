#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpulse/propagator.hpp"
#include "qpulse/sweep.hpp"

namespace qpulse::cli {

struct PointRequest {
    double theta = 0.0;
    double phi = 0.0;
    double omega0 = 1.0;
    double delta = 0.0;
    double time = 1.0;
    PropagatorMode mode = PropagatorMode::Exact;
    std::string observable = "all";  // qfi-theta | qfi-phi | icod | all
    double log_base = 2.0;
};

struct SweepRequest {
    std::string x_spec;  // name:lo:hi:count
    std::string y_spec;
    PointParams fixed;
    PropagatorMode mode = PropagatorMode::Exact;
    std::vector<std::string> observables;  // empty = all three
    std::string out_path;
    std::string gnuplot_path;  // empty = no script
    int jobs = 0;
    double log_base = 2.0;
};

struct FiguresRequest {
    std::string mode = "both";  // exact | paper | both
    std::string out_dir = ".";
    int resolution = 200;
    double time = 1.0;
    int jobs = 0;
    double log_base = 2.0;
};

struct ValidateRequest {
    std::uint64_t seed = 20240601;
};

// Each command prints to `out` and returns the process exit code for the
// success path. Domain and usage failures are thrown (std::invalid_argument,
// std::domain_error, NonPhysicalError) and mapped to exit codes by main.
int cmd_point(const PointRequest& req, std::ostream& out);
int cmd_sweep(const SweepRequest& req, std::ostream& out);
int cmd_figures(const FiguresRequest& req, std::ostream& out);
int cmd_validate(const ValidateRequest& req, std::ostream& out);

// "theta:0:pi:50" -> axis; lo/hi accept pi literals.
AxisSpec parse_axis_spec(const std::string& text);

Observable observable_from_flag(const std::string& name);  // "qfi-theta" etc.
PropagatorMode mode_from_flag(const std::string& name);    // "exact" | "paper"

// out.csv -> out.meta.json
std::string meta_path_for(const std::string& csv_path);

}  // namespace qpulse::cli
