#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpulse/bloch.hpp"
#include "qpulse/propagator.hpp"

namespace qpulse {

enum class SweepParameter { Theta, Phi, Omega0, Delta };

const char* to_string(SweepParameter p) noexcept;

// Uniform inclusive axis: node i = lo + i (hi - lo)/(count - 1), computed per
// node so endpoints land exactly on lo and hi.
struct AxisSpec {
    SweepParameter param = SweepParameter::Theta;
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

double axis_node(const AxisSpec& axis, int i) noexcept;

// Complete single-point assignment (theta, phi, omega0, delta, time). The
// pulse duration is taken equal to the evaluation time.
struct PointParams {
    double theta = 0.0;
    double phi = 0.0;
    double omega0 = 1.0;
    double delta = 0.0;
    double time = 1.0;
};

// A 2-D sweep plane: two distinct axis parameters plus fixed values for
// everything else. Axis-bound entries of `fixed` are ignored.
struct SweepPlane {
    AxisSpec x;
    AxisSpec y;
    PointParams fixed;
};

// Throws std::invalid_argument for duplicate axes, counts < 2, or ranges
// outside each parameter's domain.
void validate_plane(const SweepPlane& plane);

PointParams cell_params(const SweepPlane& plane, int ix, int iy) noexcept;

enum class Observable { QfiTheta, QfiPhi, EncodedInfo };

const char* to_string(Observable o) noexcept;

enum class CellStatus { Ok, NonPhysical };

const char* to_string(CellStatus s) noexcept;

struct CellResult {
    CellStatus status = CellStatus::Ok;
    double s_norm = 0.0;
    std::optional<double> qfi_theta;
    std::optional<double> qfi_phi;
    std::optional<double> i_cod;

    std::optional<double> get(Observable o) const;
};

struct SweepGrid {
    SweepPlane plane;
    PropagatorMode mode = PropagatorMode::Exact;
    std::vector<Observable> observables;
    double log_base = 2.0;
    std::vector<CellResult> cells;  // index = iy * x.count + ix
    int nonphysical_count = 0;

    const CellResult& at(int ix, int iy) const {
        return cells[static_cast<std::size_t>(iy) * plane.x.count + ix];
    }
};

// Evaluates one parameter point. A non-physical evolved norm in PaperLiteral
// mode becomes CellStatus::NonPhysical with no observable values rather than
// an exception; invalid parameters still throw.
CellResult evaluate_point(const PointParams& pt, PropagatorMode mode,
                          const std::vector<Observable>& observables,
                          double log_base = 2.0);

// Evaluates every requested observable at every grid node. Rows are handed to
// `jobs` workers (0 means hardware concurrency) that write disjoint index
// ranges of a preallocated grid, so the result is identical for any worker
// count or scheduling order.
SweepGrid run_sweep(const SweepPlane& plane, PropagatorMode mode,
                    const std::vector<Observable>& observables, int jobs = 0,
                    double log_base = 2.0);

// One of the nine bundled contour planes (fig1..fig9).
struct FigureSpec {
    std::string id;
    SweepPlane plane;
    Observable observable = Observable::QfiTheta;
};

// The bundled figure planes:
//   fig1/fig2: (theta, omega0), delta = 0.2, phi = pi   (F_theta, I_cod)
//   fig3/fig4: (theta, omega0), delta = 0.9, phi = pi   (F_theta, I_cod)
//   fig5/fig6: (theta, delta),  omega0 = 0.1, phi = pi  (F_theta, I_cod)
//   fig7/fig8: (phi, delta),    omega0 = 0.5, theta = pi (F_phi, I_cod)
//   fig9:      (phi, delta),    omega0 = 0.5, theta = 0  (I_cod)
// The omega0 axis starts at 0.005 (delta/omega0 diverges at 0) and the delta
// axis spans [0, 1]; evaluation time defaults to 1. All three choices are
// recorded as assumptions in output metadata.
std::vector<FigureSpec> figure_suite(int resolution = 200, double time = 1.0);

inline constexpr double kOmega0AxisMin = 0.005;
inline constexpr double kDeltaAxisMax = 1.0;

}  // namespace qpulse
