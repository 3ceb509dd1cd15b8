#pragma once

#include "qpulse/bloch.hpp"
#include "qpulse/propagator.hpp"

namespace qpulse {

// Which initial-state angle carries the parameter being estimated.
enum class EstimableParameter { Theta, Phi };

const char* to_string(EstimableParameter p) noexcept;

enum class QfiBranch { Mixed, Pure };

const char* to_string(QfiBranch b) noexcept;

struct QfiResult {
    double value = 0.0;                  // >= 0
    QfiBranch branch = QfiBranch::Pure;  // Pure iff s_norm >= 1 - eps_pure
    double s_norm = 0.0;                 // |s(t)| at evaluation
};

// Analytic partials of the initial Bloch vector:
//   d/dtheta: ( cos theta cos phi, cos theta sin phi, sin theta)
//   d/dphi:   (-sin theta sin phi, sin theta cos phi, 0)
BlochVector d_initial_bloch(const Angles& angles, EstimableParameter param);

// Bloch-vector Fisher information of the evolved state. The propagator is
// parameter-independent, so ds(t) = A ds(0) with the analytic ds(0).
//   |s| <  1 - eps_pure:  [s.ds]^2 / (1 - |s|^2) + |ds|^2
//   |s| >= 1 - eps_pure:  |ds|^2
// Throws NonPhysicalError when |s| > 1 + eps_phys.
QfiResult qfi_bloch(const PulseConfig& cfg, double t, const Angles& angles,
                    EstimableParameter param, PropagatorMode mode);

// Independent check of qfi_bloch through the spectral route: materializes
// rho = (I + s.sigma)/2 as a complex 2x2 matrix, eigendecomposes it, takes
// d rho by central finite difference of the whole pipeline at fd_step, and
// sums 2 |<i| d rho |j>|^2 / (p_i + p_j) over eigenpairs with p_i + p_j > 0.
// fd_step must lie in [1e-8, 1e-3]; throws DomainEdgeError when the stencil
// would leave an angle domain and NonPhysicalError as above.
double qfi_spectral_oracle(const PulseConfig& cfg, double t, const Angles& angles,
                           EstimableParameter param, PropagatorMode mode,
                           double fd_step);

}  // namespace qpulse
