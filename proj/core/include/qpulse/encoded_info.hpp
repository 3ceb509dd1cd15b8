#pragma once

#include "qpulse/bloch.hpp"
#include "qpulse/propagator.hpp"

namespace qpulse {

struct InfoResult {
    double value = 0.0;   // in [0, 1] for log base 2
    double s_norm = 0.0;  // |s(t)| at evaluation
};

// Binary entropy -p log2 p - (1-p) log2(1-p) with H(0) = H(1) = 0 by explicit
// branch (0 log 0 would otherwise produce NaN, and pure states are the
// dominant input). Throws std::domain_error outside [0, 1].
double binary_entropy(double p);

// Entropy of the evolved state's spectral pair: evolves s(0) under the
// selected propagator and returns -sum_i lambda_i log lambda_i. Base 2 (bits)
// unless log_base overrides; the base is an output-metadata knob, not a
// physics choice. Throws NonPhysicalError when |s(t)| > 1 + eps_phys.
InfoResult encoded_information(const PulseConfig& cfg, double t, const Angles& angles,
                               PropagatorMode mode, double log_base = 2.0);

}  // namespace qpulse
