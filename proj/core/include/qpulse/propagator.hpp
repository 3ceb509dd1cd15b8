#pragma once

#include "qpulse/bloch.hpp"
#include "qpulse/mat3.hpp"

namespace qpulse {

// Exact: closed-form rotation solving the Bloch equations
//   sx' = -delta sy,  sy' = delta sx - omega0 sz,  sz' = omega0 sy.
// PaperLiteral: verbatim transcription of a published coefficient table for
// the same evolution, kept as printed. It is not orthogonal and can push
// |s| past 1; callers must expect that.
enum class PropagatorMode { Exact, PaperLiteral };

const char* to_string(PropagatorMode mode) noexcept;

// 3x3 evolution matrix s(t) = A s(0), tagged with the mode that built it and
// the dimensionless inputs tau = omega0 t, delta = Delta/omega0.
// In Exact mode A is a rotation (A^T A = I, det A = 1 up to rounding); in
// PaperLiteral mode no such guarantee exists.
struct Propagator {
    Mat3 a;
    PropagatorMode mode = PropagatorMode::Exact;
    double tau = 0.0;
    double delta_ratio = 0.0;
};

// Intermediates of the published coefficient table, with c = cos(tau sqrt(eta)):
//   lambda1 = sin(tau sqrt(eta)) / sqrt(eta)
//   lambda2 = delta^2 + cos(tau sqrt(eta))
//   lambda3 = eta lambda1^2 / 2
//   lambda4 = 1 + (eta + delta^2) cos(tau sqrt(eta))
struct AppendixIntermediates {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
    double c = 0.0;
};

AppendixIntermediates appendix_intermediates(double delta_ratio, double tau) noexcept;

// Rotation about n = (1, 0, delta)/sqrt(eta) by angle tau sqrt(eta), in
// closed (axis-angle) form. Throws std::invalid_argument when t is outside
// the pulse window [0, duration].
Propagator propagator_exact(const PulseConfig& cfg, double t);

// The published coefficient table evaluated as printed (see the .cpp for the
// transcription rulings). Same pulse-window check as the exact mode.
Propagator propagator_paper_literal(const PulseConfig& cfg, double t);

Propagator make_propagator(const PulseConfig& cfg, double t, PropagatorMode mode);

// Plain matrix-vector product A s0.
BlochVector evolve(const Propagator& p, const BlochVector& s0) noexcept;

// Fixed-step RK4 for the Bloch equations from 0 to t; the final partial step
// is shortened to land exactly on t. Independent oracle for the closed-form
// propagator. Throws std::invalid_argument for step <= 0 or t outside the
// pulse window.
BlochVector integrate_bloch_ode(const PulseConfig& cfg, const BlochVector& s0,
                                double t, double step);

// 1e-4 * min(1, 1/omega0, 1/delta): keeps the step well under every
// oscillation period without adaptive control.
double default_ode_step(const PulseConfig& cfg) noexcept;

}  // namespace qpulse
