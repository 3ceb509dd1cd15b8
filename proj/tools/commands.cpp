#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "angle_literal.hpp"
#include "csv_io.hpp"
#include "json.hpp"
#include "qpulse/encoded_info.hpp"
#include "qpulse/qfi.hpp"
#include "qpulse/version.hpp"
#include "validation.hpp"

namespace qpulse::cli {

namespace {

void write_text_file(const std::string& path,
                     const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    body(out);
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<std::string> base_assumptions(double time, double log_base) {
    return {
        "pulse duration equals the evaluation time t = " + format_double(time),
        "encoded information uses log base " + format_double(log_base),
    };
}

std::vector<std::string> figure_assumptions(double time, double log_base) {
    auto a = base_assumptions(time, log_base);
    a.push_back("omega0 axes start at " + format_double(kOmega0AxisMin) +
                " so delta = Delta/omega0 stays finite");
    a.push_back("delta axes span [0, " + format_double(kDeltaAxisMax) + "]");
    return a;
}

// Writes csv + sidecar metadata; removes both on failure so a crashed run
// never leaves a truncated file that looks complete.
void write_grid_files(const std::string& csv_path, const SweepGrid& grid,
                      const std::string& figure,
                      const std::vector<std::string>& assumptions,
                      const std::string& gnuplot_path = {}) {
    const std::string meta = meta_path_for(csv_path);
    try {
        write_text_file(csv_path, [&](std::ostream& os) { write_sweep_csv(os, grid); });
        write_text_file(meta, [&](std::ostream& os) {
            os << sweep_metadata(grid, figure, assumptions).dump(2) << '\n';
        });
        if (!gnuplot_path.empty()) {
            write_text_file(gnuplot_path, [&](std::ostream& os) {
                write_gnuplot_script(os, csv_path, grid);
            });
        }
    } catch (...) {
        std::remove(csv_path.c_str());
        std::remove(meta.c_str());
        if (!gnuplot_path.empty()) std::remove(gnuplot_path.c_str());
        throw;
    }
}

struct OkStats {
    int ok_cells = 0;
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
};

OkStats ok_stats(const SweepGrid& grid, Observable o) {
    OkStats s;
    for (const CellResult& cell : grid.cells) {
        const std::optional<double> v = cell.get(o);
        if (!v) continue;
        ++s.ok_cells;
        s.min = std::min(s.min, *v);
        s.max = std::max(s.max, *v);
    }
    return s;
}

// Fig-1 claim: qfi_theta stays almost zero wherever omega0 < 0.1 (omega0 is
// the y axis). Reported as a verdict, never enforced: the transcribed
// propagator leaves most of that band non-physical, so at some resolutions
// there is nothing to measure.
nlohmann::json low_omega0_claim(const SweepGrid& grid) {
    constexpr double kBand = 0.1;
    constexpr double kRelThreshold = 0.05;
    double plane_max = -std::numeric_limits<double>::infinity();
    double band_max = -std::numeric_limits<double>::infinity();
    int band_cells = 0;
    for (int iy = 0; iy < grid.plane.y.count; ++iy) {
        const double omega0 = axis_node(grid.plane.y, iy);
        for (int ix = 0; ix < grid.plane.x.count; ++ix) {
            const std::optional<double> v = grid.at(ix, iy).get(Observable::QfiTheta);
            if (!v) continue;
            plane_max = std::max(plane_max, *v);
            if (omega0 < kBand) {
                ++band_cells;
                band_max = std::max(band_max, *v);
            }
        }
    }
    nlohmann::json c{
        {"figure", "fig1"},
        {"claim", "qfi_theta is almost zero wherever omega0 < 0.1"},
        {"criterion", "max over physical cells with omega0 < 0.1 is below " +
                          format_double(kRelThreshold) + " x the plane-wide physical max"},
        {"physical_cells_below_0.1", band_cells},
    };
    if (band_cells == 0 || !(plane_max > 0.0)) {
        c["verdict"] = "not evaluable";
        c["reason"] = "no physical cells with omega0 < 0.1 on this plane";
    } else {
        c["band_max"] = band_max;
        c["plane_max"] = plane_max;
        c["verdict"] = band_max < kRelThreshold * plane_max ? "observed" : "not observed";
    }
    return c;
}

// Fig-2 claim: i_cod peaks at small omega0 (again the y axis).
nlohmann::json peak_omega0_claim(const SweepGrid& grid) {
    constexpr double kSmall = 0.25;
    double best = -std::numeric_limits<double>::infinity();
    double best_omega0 = std::numeric_limits<double>::quiet_NaN();
    int ok_cells = 0;
    for (int iy = 0; iy < grid.plane.y.count; ++iy) {
        const double omega0 = axis_node(grid.plane.y, iy);
        for (int ix = 0; ix < grid.plane.x.count; ++ix) {
            const std::optional<double> v = grid.at(ix, iy).get(Observable::EncodedInfo);
            if (!v) continue;
            ++ok_cells;
            if (*v > best) {
                best = *v;
                best_omega0 = omega0;
            }
        }
    }
    nlohmann::json c{
        {"figure", "fig2"},
        {"claim", "i_cod is maximal at small omega0"},
        {"criterion",
         "the physical-cell argmax sits at omega0 <= " + format_double(kSmall)},
        {"physical_cells", ok_cells},
    };
    if (ok_cells == 0) {
        c["verdict"] = "not evaluable";
        c["reason"] = "no physical cells on this plane";
    } else {
        c["max_i_cod"] = best;
        c["omega0_at_max"] = best_omega0;
        c["verdict"] = best_omega0 <= kSmall ? "observed" : "not observed";
    }
    return c;
}

}  // namespace

AxisSpec parse_axis_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::string::size_type pos = 0;
    while (true) {
        const auto colon = text.find(':', pos);
        if (colon == std::string::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, colon - pos));
        pos = colon + 1;
    }
    if (parts.size() != 4) {
        throw std::invalid_argument("axis spec '" + text +
                                    "' must look like name:lo:hi:count");
    }

    AxisSpec axis;
    if (parts[0] == "theta") {
        axis.param = SweepParameter::Theta;
    } else if (parts[0] == "phi") {
        axis.param = SweepParameter::Phi;
    } else if (parts[0] == "omega0") {
        axis.param = SweepParameter::Omega0;
    } else if (parts[0] == "delta") {
        axis.param = SweepParameter::Delta;
    } else {
        throw std::invalid_argument("unknown axis parameter '" + parts[0] +
                                    "' (expected theta, phi, omega0, or delta)");
    }
    axis.lo = parse_angle(parts[1]);
    axis.hi = parse_angle(parts[2]);
    const char* first = parts[3].data();
    const char* last = first + parts[3].size();
    const auto [end, ec] = std::from_chars(first, last, axis.count);
    if (ec != std::errc{} || end != last) {
        throw std::invalid_argument("axis count '" + parts[3] +
                                    "' is not an integer");
    }
    return axis;
}

Observable observable_from_flag(const std::string& name) {
    if (name == "qfi-theta") return Observable::QfiTheta;
    if (name == "qfi-phi") return Observable::QfiPhi;
    if (name == "icod") return Observable::EncodedInfo;
    throw std::invalid_argument("unknown observable '" + name +
                                "' (expected qfi-theta, qfi-phi, or icod)");
}

PropagatorMode mode_from_flag(const std::string& name) {
    if (name == "exact") return PropagatorMode::Exact;
    if (name == "paper") return PropagatorMode::PaperLiteral;
    throw std::invalid_argument("unknown mode '" + name +
                                "' (expected exact or paper)");
}

std::string meta_path_for(const std::string& csv_path) {
    constexpr std::string_view kExt = ".csv";
    if (csv_path.size() >= kExt.size() &&
        csv_path.compare(csv_path.size() - kExt.size(), kExt.size(), kExt) == 0) {
        return csv_path.substr(0, csv_path.size() - kExt.size()) + ".meta.json";
    }
    return csv_path + ".meta.json";
}

int cmd_point(const PointRequest& req, std::ostream& out) {
    const Angles angles(req.theta, req.phi);
    const PulseConfig cfg(req.omega0, req.delta, req.time);

    nlohmann::json j{
        {"input",
         {{"theta", req.theta},
          {"phi", req.phi},
          {"omega0", req.omega0},
          {"delta", req.delta},
          {"time", req.time},
          {"mode", to_string(req.mode)},
          {"observable", req.observable},
          {"log_base", req.log_base}}},
    };

    const Propagator p = make_propagator(cfg, req.time, req.mode);
    const BlochVector s = evolve(p, initial_bloch(angles));
    j["s"] = {s.sx, s.sy, s.sz};
    j["s_norm"] = s.norm();

    const bool all = req.observable == "all";
    nlohmann::json results;
    if (all || req.observable == "qfi-theta") {
        const QfiResult r =
            qfi_bloch(cfg, req.time, angles, EstimableParameter::Theta, req.mode);
        results["qfi_theta"] = {{"value", r.value}, {"branch", to_string(r.branch)}};
    }
    if (all || req.observable == "qfi-phi") {
        const QfiResult r =
            qfi_bloch(cfg, req.time, angles, EstimableParameter::Phi, req.mode);
        results["qfi_phi"] = {{"value", r.value}, {"branch", to_string(r.branch)}};
    }
    if (all || req.observable == "icod") {
        const InfoResult r =
            encoded_information(cfg, req.time, angles, req.mode, req.log_base);
        results["i_cod"] = {{"value", r.value}};
    }
    j["results"] = results;

    out << j.dump(2) << '\n';
    return 0;
}

int cmd_sweep(const SweepRequest& req, std::ostream& out) {
    SweepPlane plane;
    plane.x = parse_axis_spec(req.x_spec);
    plane.y = parse_axis_spec(req.y_spec);
    plane.fixed = req.fixed;

    std::vector<Observable> observables;
    if (req.observables.empty()) {
        observables = {Observable::QfiTheta, Observable::QfiPhi,
                       Observable::EncodedInfo};
    } else {
        observables.reserve(req.observables.size());
        for (const std::string& name : req.observables) {
            observables.push_back(observable_from_flag(name));
        }
    }

    const SweepGrid grid =
        run_sweep(plane, req.mode, observables, req.jobs, req.log_base);
    write_grid_files(req.out_path, grid, "custom",
                     base_assumptions(plane.fixed.time, req.log_base),
                     req.gnuplot_path);

    out << "wrote " << req.out_path << " (" << grid.cells.size() << " cells, "
        << grid.nonphysical_count << " non-physical)\n";
    out << "wrote " << meta_path_for(req.out_path) << '\n';
    if (!req.gnuplot_path.empty()) out << "wrote " << req.gnuplot_path << '\n';
    return 0;
}

int cmd_figures(const FiguresRequest& req, std::ostream& out) {
    std::vector<PropagatorMode> modes;
    if (req.mode == "exact" || req.mode == "both") modes.push_back(PropagatorMode::Exact);
    if (req.mode == "paper" || req.mode == "both")
        modes.push_back(PropagatorMode::PaperLiteral);
    if (modes.empty()) {
        throw std::invalid_argument("unknown mode '" + req.mode +
                                    "' (expected exact, paper, or both)");
    }

    const std::vector<FigureSpec> figures = figure_suite(req.resolution, req.time);
    const std::filesystem::path dir(req.out_dir.empty() ? "." : req.out_dir);
    std::filesystem::create_directories(dir);
    const auto assumptions = figure_assumptions(req.time, req.log_base);

    nlohmann::json report{
        {"tool_version", kVersion},
        {"resolution", req.resolution},
        {"time", req.time},
        {"log_base", req.log_base},
    };
    nlohmann::json modes_json = nlohmann::json::array();
    for (const PropagatorMode m : modes) modes_json.push_back(to_string(m));
    report["modes"] = modes_json;

    nlohmann::json figures_json = nlohmann::json::object();
    double max_qfi_theta_dev = 0.0;  // exact mode, planes that sweep qfi_theta
    double max_i_cod = 0.0;          // exact mode, planes that sweep i_cod
    bool have_exact = false;
    nlohmann::json claims = nlohmann::json::array();

    for (const PropagatorMode mode : modes) {
        for (const FigureSpec& fig : figures) {
            const SweepGrid grid =
                run_sweep(fig.plane, mode, {fig.observable}, req.jobs, req.log_base);
            const std::string stem = fig.id + "_" + to_string(mode);
            const std::string csv = (dir / (stem + ".csv")).string();
            write_grid_files(csv, grid, fig.id, assumptions);
            out << "wrote " << csv << '\n';

            const OkStats stats = ok_stats(grid, fig.observable);
            nlohmann::json entry{
                {"figure", fig.id},
                {"mode", to_string(mode)},
                {"observable", to_string(fig.observable)},
                {"csv", stem + ".csv"},
                {"cells", static_cast<int>(grid.cells.size())},
                {"nonphysical_cells", grid.nonphysical_count},
            };
            if (stats.ok_cells > 0) {
                entry["value_min"] = stats.min;
                entry["value_max"] = stats.max;
            }
            if (mode == PropagatorMode::Exact && stats.ok_cells > 0) {
                have_exact = true;
                if (fig.observable == Observable::QfiTheta) {
                    const double dev =
                        std::max(std::abs(stats.min - 1.0), std::abs(stats.max - 1.0));
                    entry["max_deviation_from_1"] = dev;
                    max_qfi_theta_dev = std::max(max_qfi_theta_dev, dev);
                } else if (fig.observable == Observable::EncodedInfo) {
                    entry["max_i_cod"] = stats.max;
                    max_i_cod = std::max(max_i_cod, stats.max);
                }
            }
            figures_json[stem] = entry;

            if (mode == PropagatorMode::PaperLiteral && fig.id == "fig1") {
                claims.push_back(low_omega0_claim(grid));
            }
            if (mode == PropagatorMode::PaperLiteral && fig.id == "fig2") {
                claims.push_back(peak_omega0_claim(grid));
            }
        }
    }
    report["figures"] = figures_json;
    if (have_exact) {
        report["exact_mode_summary"] = {
            {"max_qfi_theta_deviation_from_1", max_qfi_theta_dev},
            {"max_i_cod", max_i_cod},
        };
    }
    if (!claims.empty()) report["qualitative_claims"] = claims;

    const std::string report_path = (dir / "report.json").string();
    write_text_file(report_path,
                    [&](std::ostream& os) { os << report.dump(2) << '\n'; });
    out << "wrote " << report_path << '\n';
    return 0;
}

int cmd_validate(const ValidateRequest& req, std::ostream& out) {
    ValidationOptions opts;
    opts.seed = req.seed;
    return run_validation(out, opts) ? 0 : 1;
}

}  // namespace qpulse::cli
