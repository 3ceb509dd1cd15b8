#pragma once

#include <cmath>

#include "qpulse/errors.hpp"

namespace qpulse {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// |s| may exceed 1 by at most this much before a state is rejected as
// non-physical. Rotation dynamics keep |s| = 1; drift beyond this is a wrong
// propagator, not rounding.
inline constexpr double kEpsPhys = 1e-9;

// Branch threshold on |s| between the mixed- and pure-state Fisher formulas.
inline constexpr double kEpsPure = 1e-9;

// Initial-state angles of the qubit coherent state
//   |psi> = cos(theta/2)|0> + e^{-i phi} sin(theta/2)|1>.
// Inputs are validated against [0, pi] x [0, 2pi], never wrapped: silent
// wrapping would hide caller bugs in sweep axis generation.
class Angles {
public:
    Angles(double theta, double phi);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }

private:
    double theta_;
    double phi_;
};

// Rectangular drive pulse: Rabi strength omega0 > 0, detuning delta >= 0,
// duration T >= 0. The envelope is 1 on [0, T]; evolution is only defined
// inside that window.
class PulseConfig {
public:
    PulseConfig(double omega0, double delta_detuning, double duration);

    double omega0() const noexcept { return omega0_; }
    double delta_detuning() const noexcept { return delta_; }
    double duration() const noexcept { return duration_; }

    double delta_ratio() const noexcept { return delta_ / omega0_; }  // delta
    double eta() const noexcept {                                     // 1 + delta^2
        const double d = delta_ratio();
        return 1.0 + d * d;
    }
    double tau(double t) const noexcept { return omega0_ * t; }       // omega0 * t

private:
    double omega0_;
    double delta_;
    double duration_;
};

// Real 3-vector (sx, sy, sz). Represents a qubit state via
// rho = (I + s.sigma)/2 when |s| <= 1; also used unconstrained for parameter
// derivatives of states.
struct BlochVector {
    double sx = 0.0;
    double sy = 0.0;
    double sz = 0.0;

    double norm_squared() const noexcept { return sx * sx + sy * sy + sz * sz; }
    double norm() const noexcept { return std::sqrt(norm_squared()); }
};

inline double dot(const BlochVector& a, const BlochVector& b) noexcept {
    return a.sx * b.sx + a.sy * b.sy + a.sz * b.sz;
}

inline BlochVector operator+(const BlochVector& a, const BlochVector& b) noexcept {
    return {a.sx + b.sx, a.sy + b.sy, a.sz + b.sz};
}

inline BlochVector operator-(const BlochVector& a, const BlochVector& b) noexcept {
    return {a.sx - b.sx, a.sy - b.sy, a.sz - b.sz};
}

inline BlochVector operator*(double c, const BlochVector& v) noexcept {
    return {c * v.sx, c * v.sy, c * v.sz};
}

// Eigenvalues of rho = (I + s.sigma)/2, sorted lambda1 >= lambda2.
// lambda1 + lambda2 = 1 for any input.
struct SpectralPair {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

// s(0) = (sin theta cos phi, sin theta sin phi, -cos theta); unit norm.
BlochVector initial_bloch(const Angles& angles);

// ((1+|s|)/2, (1-|s|)/2). Norms in (1, 1+eps_phys] are clamped to 1;
// anything beyond raises NonPhysicalError.
SpectralPair spectrum_from_bloch(const BlochVector& s);

}  // namespace qpulse
