#include "qpulse/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "qpulse/encoded_info.hpp"
#include "qpulse/qfi.hpp"

namespace qpulse {

namespace {

struct Domain {
    double lo;
    double hi;
    bool lo_open;
};

Domain domain_of(SweepParameter p) {
    switch (p) {
        case SweepParameter::Theta: return {0.0, kPi, false};
        case SweepParameter::Phi: return {0.0, kTwoPi, false};
        case SweepParameter::Omega0: return {0.0, std::numeric_limits<double>::infinity(), true};
        case SweepParameter::Delta: return {0.0, std::numeric_limits<double>::infinity(), false};
    }
    return {0.0, 0.0, false};
}

void validate_axis(const AxisSpec& axis, const char* which) {
    const std::string name = std::string(which) + " axis (" + to_string(axis.param) + ")";
    if (axis.count < 2) {
        throw std::invalid_argument(name + " needs at least 2 points, got " +
                                    std::to_string(axis.count));
    }
    if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi) || axis.lo >= axis.hi) {
        throw std::invalid_argument(name + " range [" + std::to_string(axis.lo) + ", " +
                                    std::to_string(axis.hi) + "] is not an increasing interval");
    }
    const Domain dom = domain_of(axis.param);
    const bool lo_ok = dom.lo_open ? axis.lo > dom.lo : axis.lo >= dom.lo;
    if (!lo_ok || axis.hi > dom.hi) {
        throw std::invalid_argument(name + " range [" + std::to_string(axis.lo) + ", " +
                                    std::to_string(axis.hi) + "] leaves the parameter domain");
    }
}

int hardware_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

const char* to_string(SweepParameter p) noexcept {
    switch (p) {
        case SweepParameter::Theta: return "theta";
        case SweepParameter::Phi: return "phi";
        case SweepParameter::Omega0: return "omega0";
        case SweepParameter::Delta: return "delta";
    }
    return "?";
}

const char* to_string(Observable o) noexcept {
    switch (o) {
        case Observable::QfiTheta: return "qfi_theta";
        case Observable::QfiPhi: return "qfi_phi";
        case Observable::EncodedInfo: return "i_cod";
    }
    return "?";
}

const char* to_string(CellStatus s) noexcept {
    return s == CellStatus::Ok ? "ok" : "nonphysical";
}

double axis_node(const AxisSpec& axis, int i) noexcept {
    if (i == axis.count - 1) return axis.hi;  // land exactly on the endpoint
    return axis.lo + static_cast<double>(i) * (axis.hi - axis.lo) /
                         static_cast<double>(axis.count - 1);
}

void validate_plane(const SweepPlane& plane) {
    if (plane.x.param == plane.y.param) {
        throw std::invalid_argument(std::string("x and y axes must differ, both are ") +
                                    to_string(plane.x.param));
    }
    validate_axis(plane.x, "x");
    validate_axis(plane.y, "y");
    if (!(plane.fixed.time >= 0.0) || !std::isfinite(plane.fixed.time)) {
        throw std::invalid_argument("time must be >= 0, got " +
                                    std::to_string(plane.fixed.time));
    }
}

PointParams cell_params(const SweepPlane& plane, int ix, int iy) noexcept {
    PointParams pt = plane.fixed;
    const auto assign = [&pt](SweepParameter p, double v) {
        switch (p) {
            case SweepParameter::Theta: pt.theta = v; break;
            case SweepParameter::Phi: pt.phi = v; break;
            case SweepParameter::Omega0: pt.omega0 = v; break;
            case SweepParameter::Delta: pt.delta = v; break;
        }
    };
    assign(plane.x.param, axis_node(plane.x, ix));
    assign(plane.y.param, axis_node(plane.y, iy));
    return pt;
}

std::optional<double> CellResult::get(Observable o) const {
    switch (o) {
        case Observable::QfiTheta: return qfi_theta;
        case Observable::QfiPhi: return qfi_phi;
        case Observable::EncodedInfo: return i_cod;
    }
    return std::nullopt;
}

CellResult evaluate_point(const PointParams& pt, PropagatorMode mode,
                          const std::vector<Observable>& observables,
                          double log_base) {
    const Angles angles(pt.theta, pt.phi);
    const PulseConfig cfg(pt.omega0, pt.delta, pt.time);

    CellResult cell;
    const Propagator p = make_propagator(cfg, pt.time, mode);
    cell.s_norm = evolve(p, initial_bloch(angles)).norm();
    if (cell.s_norm > 1.0 + kEpsPhys) {
        cell.status = CellStatus::NonPhysical;
        return cell;
    }

    cell.status = CellStatus::Ok;
    for (const Observable o : observables) {
        switch (o) {
            case Observable::QfiTheta:
                cell.qfi_theta =
                    qfi_bloch(cfg, pt.time, angles, EstimableParameter::Theta, mode).value;
                break;
            case Observable::QfiPhi:
                cell.qfi_phi =
                    qfi_bloch(cfg, pt.time, angles, EstimableParameter::Phi, mode).value;
                break;
            case Observable::EncodedInfo:
                cell.i_cod = encoded_information(cfg, pt.time, angles, mode, log_base).value;
                break;
        }
    }
    return cell;
}

SweepGrid run_sweep(const SweepPlane& plane, PropagatorMode mode,
                    const std::vector<Observable>& observables, int jobs,
                    double log_base) {
    validate_plane(plane);
    if (observables.empty()) {
        throw std::invalid_argument("at least one observable must be requested");
    }

    SweepGrid grid;
    grid.plane = plane;
    grid.mode = mode;
    grid.observables = observables;
    grid.log_base = log_base;

    const int nx = plane.x.count;
    const int ny = plane.y.count;
    grid.cells.resize(static_cast<std::size_t>(nx) * ny);

    const auto fill_row = [&](int iy) {
        for (int ix = 0; ix < nx; ++ix) {
            grid.cells[static_cast<std::size_t>(iy) * nx + ix] =
                evaluate_point(cell_params(plane, ix, iy), mode, observables, log_base);
        }
    };

    int workers = jobs > 0 ? jobs : hardware_jobs();
    workers = std::min(workers, ny);
    if (workers <= 1) {
        for (int iy = 0; iy < ny; ++iy) fill_row(iy);
    } else {
        std::atomic<int> next_row{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (int iy = next_row.fetch_add(1); iy < ny; iy = next_row.fetch_add(1)) {
                    fill_row(iy);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    for (const CellResult& cell : grid.cells) {
        if (cell.status == CellStatus::NonPhysical) ++grid.nonphysical_count;
    }
    return grid;
}

std::vector<FigureSpec> figure_suite(int resolution, double time) {
    if (resolution < 2) {
        throw std::invalid_argument("resolution must be >= 2, got " +
                                    std::to_string(resolution));
    }
    const AxisSpec theta_axis{SweepParameter::Theta, 0.0, kPi, resolution};
    const AxisSpec phi_axis{SweepParameter::Phi, 0.0, kTwoPi, resolution};
    const AxisSpec omega0_axis{SweepParameter::Omega0, kOmega0AxisMin, 1.0, resolution};
    const AxisSpec delta_axis{SweepParameter::Delta, 0.0, kDeltaAxisMax, resolution};

    const auto plane = [time](AxisSpec x, AxisSpec y, PointParams fixed) {
        fixed.time = time;
        return SweepPlane{x, y, fixed};
    };

    PointParams fx;
    std::vector<FigureSpec> figures;
    fx = {};
    fx.delta = 0.2;
    fx.phi = kPi;
    figures.push_back({"fig1", plane(theta_axis, omega0_axis, fx), Observable::QfiTheta});
    figures.push_back({"fig2", plane(theta_axis, omega0_axis, fx), Observable::EncodedInfo});
    fx.delta = 0.9;
    figures.push_back({"fig3", plane(theta_axis, omega0_axis, fx), Observable::QfiTheta});
    figures.push_back({"fig4", plane(theta_axis, omega0_axis, fx), Observable::EncodedInfo});
    fx = {};
    fx.omega0 = 0.1;
    fx.phi = kPi;
    figures.push_back({"fig5", plane(theta_axis, delta_axis, fx), Observable::QfiTheta});
    figures.push_back({"fig6", plane(theta_axis, delta_axis, fx), Observable::EncodedInfo});
    fx = {};
    fx.omega0 = 0.5;
    fx.theta = kPi;
    figures.push_back({"fig7", plane(phi_axis, delta_axis, fx), Observable::QfiPhi});
    figures.push_back({"fig8", plane(phi_axis, delta_axis, fx), Observable::EncodedInfo});
    fx.theta = 0.0;
    figures.push_back({"fig9", plane(phi_axis, delta_axis, fx), Observable::EncodedInfo});
    return figures;
}

}  // namespace qpulse
