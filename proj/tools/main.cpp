#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "angle_literal.hpp"
#include "commands.hpp"
#include "csv_io.hpp"
#include "qpulse/errors.hpp"
#include "qpulse/version.hpp"

namespace {

// Exit codes: 0 success, 1 validation-suite failure, 2 usage/domain error,
// 3 non-physical evolved state at a point evaluation.
constexpr int kExitUsage = 2;
constexpr int kExitNonPhysical = 3;

}  // namespace

int main(int argc, char** argv) {
    using namespace qpulse;
    using namespace qpulse::cli;

    CLI::App app{
        "Single-qubit rectangular-pulse toolkit: Fisher information of the "
        "initial-state angles and entropy of the evolved state, per point or "
        "over 2-D parameter sweeps."};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    // Angle-valued flags arrive as strings so "pi", "pi/2", "2pi" parse exactly.
    PointRequest preq;
    std::string p_theta = "0", p_phi = "0", p_mode = "exact";
    CLI::App* point = app.add_subcommand(
        "point", "Evaluate one parameter point and print JSON");
    point->add_option("--theta", p_theta, "initial polar angle in [0, pi]; accepts pi literals")
        ->capture_default_str();
    point->add_option("--phi", p_phi, "initial azimuth in [0, 2pi]; accepts pi literals")
        ->capture_default_str();
    point->add_option("--omega0", preq.omega0, "drive strength, > 0")->capture_default_str();
    point->add_option("--delta", preq.delta, "detuning, >= 0")->capture_default_str();
    point->add_option("--time", preq.time, "pulse duration = evaluation time, >= 0")
        ->capture_default_str();
    point->add_option("--mode", p_mode, "propagator branch")
        ->check(CLI::IsMember({"exact", "paper"}))
        ->capture_default_str();
    point->add_option("--observable", preq.observable, "which result(s) to compute")
        ->check(CLI::IsMember({"qfi-theta", "qfi-phi", "icod", "all"}))
        ->capture_default_str();
    point->add_option("--log-base", preq.log_base, "entropy log base, > 1")
        ->capture_default_str();

    SweepRequest sreq;
    std::string s_theta = "0", s_phi = "0", s_mode = "exact";
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Evaluate a 2-D grid and write CSV + metadata");
    sweep->add_option("--x", sreq.x_spec,
                      "x axis as name:lo:hi:count with name in {theta, phi, omega0, delta}")
        ->required();
    sweep->add_option("--y", sreq.y_spec, "y axis, same format")->required();
    sweep->add_option("--theta", s_theta, "fixed theta when not on an axis")
        ->capture_default_str();
    sweep->add_option("--phi", s_phi, "fixed phi when not on an axis")
        ->capture_default_str();
    sweep->add_option("--omega0", sreq.fixed.omega0, "fixed omega0 when not on an axis")
        ->capture_default_str();
    sweep->add_option("--delta", sreq.fixed.delta, "fixed delta when not on an axis")
        ->capture_default_str();
    sweep->add_option("--time", sreq.fixed.time, "pulse duration = evaluation time")
        ->capture_default_str();
    sweep->add_option("--mode", s_mode, "propagator branch")
        ->check(CLI::IsMember({"exact", "paper"}))
        ->capture_default_str();
    sweep->add_option("--observable", sreq.observables,
                      "repeatable; qfi-theta, qfi-phi, icod (default: all three)")
        ->check(CLI::IsMember({"qfi-theta", "qfi-phi", "icod"}));
    sweep->add_option("--out", sreq.out_path, "output CSV path")->required();
    sweep->add_option("--gnuplot", sreq.gnuplot_path, "also write a gnuplot script here");
    sweep->add_option("--jobs", sreq.jobs, "worker threads, 0 = hardware concurrency")
        ->capture_default_str();
    sweep->add_option("--log-base", sreq.log_base, "entropy log base, > 1")
        ->capture_default_str();

    FiguresRequest freq;
    CLI::App* figures = app.add_subcommand(
        "figures", "Write the nine bundled contour planes (fig1..fig9)");
    figures->add_option("--mode", freq.mode, "exact, paper, or both")
        ->check(CLI::IsMember({"exact", "paper", "both"}))
        ->capture_default_str();
    figures->add_option("--out-dir", freq.out_dir, "output directory")
        ->capture_default_str();
    figures->add_option("--resolution", freq.resolution, "nodes per axis")
        ->capture_default_str();
    figures->add_option("--time", freq.time, "evaluation time for every plane")
        ->capture_default_str();
    figures->add_option("--jobs", freq.jobs, "worker threads, 0 = hardware concurrency")
        ->capture_default_str();
    figures->add_option("--log-base", freq.log_base, "entropy log base, > 1")
        ->capture_default_str();

    ValidateRequest vreq;
    CLI::App* validate = app.add_subcommand(
        "validate", "Run the cross-oracle self-check suite");
    validate->add_option("--seed", vreq.seed, "seed for the randomized checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints CLI11's message
        return kExitUsage;
    }

    try {
        if (point->parsed()) {
            preq.theta = parse_angle(p_theta);
            preq.phi = parse_angle(p_phi);
            preq.mode = mode_from_flag(p_mode);
            return cmd_point(preq, std::cout);
        }
        if (sweep->parsed()) {
            sreq.fixed.theta = parse_angle(s_theta);
            sreq.fixed.phi = parse_angle(s_phi);
            sreq.mode = mode_from_flag(s_mode);
            return cmd_sweep(sreq, std::cout);
        }
        if (figures->parsed()) return cmd_figures(freq, std::cout);
        if (validate->parsed()) return cmd_validate(vreq, std::cout);
    } catch (const NonPhysicalError& e) {
        std::cerr << "non-physical state: " << e.what()
                  << " [|s| = " << format_double(e.s_norm()) << "]\n";
        return kExitNonPhysical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;  // unreachable with require_subcommand(1)
}
