#include "qpulse/propagator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qpulse {

namespace {

void check_pulse_window(const PulseConfig& cfg, double t) {
    if (!std::isfinite(t) || t < 0.0 || t > cfg.duration()) {
        throw std::invalid_argument("time " + std::to_string(t) +
                                    " is outside the pulse window [0, " +
                                    std::to_string(cfg.duration()) + "]");
    }
}

BlochVector bloch_rhs(double omega0, double delta, const BlochVector& s) noexcept {
    return {-delta * s.sy, delta * s.sx - omega0 * s.sz, omega0 * s.sy};
}

}  // namespace

const char* to_string(PropagatorMode mode) noexcept {
    return mode == PropagatorMode::Exact ? "exact" : "paper";
}

AppendixIntermediates appendix_intermediates(double delta_ratio, double tau) noexcept {
    const double d = delta_ratio;
    const double eta = 1.0 + d * d;
    const double root = std::sqrt(eta);
    const double c = std::cos(tau * root);
    AppendixIntermediates out;
    out.c = c;
    out.lambda1 = std::sin(tau * root) / root;
    out.lambda2 = d * d + c;
    out.lambda3 = 0.5 * eta * out.lambda1 * out.lambda1;
    out.lambda4 = 1.0 + (eta + d * d) * c;
    return out;
}

Propagator propagator_exact(const PulseConfig& cfg, double t) {
    check_pulse_window(cfg, t);
    const double d = cfg.delta_ratio();
    const double eta = cfg.eta();
    const double root = std::sqrt(eta);
    const double alpha = cfg.tau(t) * root;  // rotation angle
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);

    // A = c I + s [n]x + (1 - c) n n^T for the unit axis n = (1, 0, d)/root.
    Propagator p;
    p.mode = PropagatorMode::Exact;
    p.tau = cfg.tau(t);
    p.delta_ratio = d;
    p.a(0, 0) = (1.0 + d * d * c) / eta;
    p.a(0, 1) = -d * s / root;
    p.a(0, 2) = d * (1.0 - c) / eta;
    p.a(1, 0) = d * s / root;
    p.a(1, 1) = c;
    p.a(1, 2) = -s / root;
    p.a(2, 0) = d * (1.0 - c) / eta;
    p.a(2, 1) = s / root;
    p.a(2, 2) = (d * d + c) / eta;
    return p;
}

Propagator propagator_paper_literal(const PulseConfig& cfg, double t) {
    check_pulse_window(cfg, t);
    const double d = cfg.delta_ratio();
    const double eta = cfg.eta();
    const double tau = cfg.tau(t);
    const AppendixIntermediates w = appendix_intermediates(d, tau);

    // Coefficient table transcribed as printed. Deliberate rulings:
    //  - a12's unbalanced opening parenthesis is closed at the end of the line;
    //  - the table's trailing "eta = omega0 t" is read as tau = omega0 t
    //    (eta = 1 + delta^2 is already taken);
    //  - a22 and a23 differ from the exact rotation and are left that way.
    // The result is generally not orthogonal.
    Propagator p;
    p.mode = PropagatorMode::PaperLiteral;
    p.tau = tau;
    p.delta_ratio = d;
    p.a(0, 0) = 1.0 / eta + d * d * w.c - d * w.lambda1;
    p.a(0, 1) = 0.5 * (1.0 + w.lambda2 / eta + d * w.lambda1);
    p.a(0, 2) = (d / eta) * w.lambda3 + w.lambda1;
    p.a(1, 0) = w.lambda4 / (2.0 * eta) + w.lambda1;
    p.a(1, 1) = w.c - d * w.lambda1;
    p.a(1, 2) = (d / eta) * w.lambda3 - d * w.lambda1;
    p.a(2, 0) = (d / eta) * w.lambda3;
    p.a(2, 1) = w.lambda1;
    p.a(2, 2) = w.lambda2 / eta;
    return p;
}

Propagator make_propagator(const PulseConfig& cfg, double t, PropagatorMode mode) {
    return mode == PropagatorMode::Exact ? propagator_exact(cfg, t)
                                         : propagator_paper_literal(cfg, t);
}

BlochVector evolve(const Propagator& p, const BlochVector& s0) noexcept {
    const Mat3& a = p.a;
    return {a(0, 0) * s0.sx + a(0, 1) * s0.sy + a(0, 2) * s0.sz,
            a(1, 0) * s0.sx + a(1, 1) * s0.sy + a(1, 2) * s0.sz,
            a(2, 0) * s0.sx + a(2, 1) * s0.sy + a(2, 2) * s0.sz};
}

BlochVector integrate_bloch_ode(const PulseConfig& cfg, const BlochVector& s0,
                                double t, double step) {
    if (!std::isfinite(step) || step <= 0.0) {
        throw std::invalid_argument("step must be > 0, got " + std::to_string(step));
    }
    check_pulse_window(cfg, t);

    const double om = cfg.omega0();
    const double de = cfg.delta_detuning();
    const auto n_full = static_cast<long long>(t / step);
    const double rem = t - static_cast<double>(n_full) * step;

    BlochVector s = s0;
    auto advance = [&](double h) {
        const BlochVector k1 = bloch_rhs(om, de, s);
        const BlochVector k2 = bloch_rhs(om, de, s + 0.5 * h * k1);
        const BlochVector k3 = bloch_rhs(om, de, s + 0.5 * h * k2);
        const BlochVector k4 = bloch_rhs(om, de, s + h * k3);
        s = s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    };
    for (long long i = 0; i < n_full; ++i) advance(step);
    if (rem > 0.0) advance(rem);
    return s;
}

double default_ode_step(const PulseConfig& cfg) noexcept {
    const double de = cfg.delta_detuning();
    double scale = std::min(1.0, 1.0 / cfg.omega0());
    if (de > 0.0) scale = std::min(scale, 1.0 / de);
    return 1e-4 * scale;
}

}  // namespace qpulse
