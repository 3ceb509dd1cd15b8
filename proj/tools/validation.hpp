#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>

#include "qpulse/propagator.hpp"

namespace qpulse::cli {

struct ValidationOptions {
    std::uint64_t seed = 20240601;

    // Injection point so tests can demonstrate that the suite catches a
    // broken closed-form propagator. Regular callers leave it empty and get
    // propagator_exact.
    std::function<Propagator(const PulseConfig&, double)> exact_propagator;
};

// Cross-oracle self-checks: closed form vs ODE integration, Bloch-formula
// Fisher information vs the spectral route, entropy identities, and the
// published coefficient table's internal identities. Prints one line per
// check plus an informational deviation report of the published table
// against the closed form. Returns true iff every hard check passed; the
// deviation report never fails (the table's disagreement with the rotation
// is a documented property of the source, not a defect here).
bool run_validation(std::ostream& out, const ValidationOptions& opts = {});

}  // namespace qpulse::cli
