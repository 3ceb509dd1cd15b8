#include "qpulse/bloch.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qpulse {

namespace {

std::string num(double v) { return std::to_string(v); }

}  // namespace

Angles::Angles(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi) {
        throw std::invalid_argument("theta must be in [0, pi], got " + num(theta));
    }
    if (!std::isfinite(phi) || phi < 0.0 || phi > kTwoPi) {
        throw std::invalid_argument("phi must be in [0, 2pi], got " + num(phi));
    }
}

PulseConfig::PulseConfig(double omega0, double delta_detuning, double duration)
    : omega0_(omega0), delta_(delta_detuning), duration_(duration) {
    if (!std::isfinite(omega0) || omega0 <= 0.0) {
        throw std::invalid_argument("omega0 must be > 0, got " + num(omega0));
    }
    if (!std::isfinite(delta_detuning) || delta_detuning < 0.0) {
        throw std::invalid_argument("delta must be >= 0, got " + num(delta_detuning));
    }
    if (!std::isfinite(duration) || duration < 0.0) {
        throw std::invalid_argument("duration must be >= 0, got " + num(duration));
    }
}

BlochVector initial_bloch(const Angles& angles) {
    const double st = std::sin(angles.theta());
    return {st * std::cos(angles.phi()), st * std::sin(angles.phi()),
            -std::cos(angles.theta())};
}

SpectralPair spectrum_from_bloch(const BlochVector& s) {
    double r = s.norm();
    if (r > 1.0 + kEpsPhys) {
        throw NonPhysicalError(r, "bloch norm " + num(r) + " exceeds 1 + eps_phys");
    }
    if (r > 1.0) r = 1.0;
    return {0.5 * (1.0 + r), 0.5 * (1.0 - r)};
}

}  // namespace qpulse
