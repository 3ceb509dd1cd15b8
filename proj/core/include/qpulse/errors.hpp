#pragma once

#include <stdexcept>
#include <string>

namespace qpulse {

// An evolved Bloch vector left the unit ball by more than eps_phys. Carries
// the offending norm so front ends can report it.
class NonPhysicalError : public std::runtime_error {
public:
    NonPhysicalError(double s_norm, const std::string& what)
        : std::runtime_error(what), s_norm_(s_norm) {}

    double s_norm() const noexcept { return s_norm_; }

private:
    double s_norm_;
};

// A finite-difference stencil would step outside an angle domain; the caller
// must shift the evaluation point instead.
class DomainEdgeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace qpulse
