#include "qpulse/encoded_info.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qpulse {

double binary_entropy(double p) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw std::domain_error("binary_entropy argument must be in [0, 1], got " +
                                std::to_string(p));
    }
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

InfoResult encoded_information(const PulseConfig& cfg, double t, const Angles& angles,
                               PropagatorMode mode, double log_base) {
    if (!std::isfinite(log_base) || log_base <= 1.0) {
        throw std::domain_error("log base must be > 1, got " + std::to_string(log_base));
    }
    const Propagator p = make_propagator(cfg, t, mode);
    const BlochVector s = evolve(p, initial_bloch(angles));
    const SpectralPair spectrum = spectrum_from_bloch(s);  // NonPhysicalError on |s| > 1
    const double scale = log_base == 2.0 ? 1.0 : 1.0 / std::log2(log_base);
    return {binary_entropy(spectrum.lambda1) * scale, s.norm()};
}

}  // namespace qpulse
