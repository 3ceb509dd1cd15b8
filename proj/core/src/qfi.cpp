#include "qpulse/qfi.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qpulse {

namespace {

using cplx = std::complex<double>;

// Column-major is overkill for 2x2; name the four entries instead.
struct Mat2c {
    cplx a00, a01, a10, a11;
};

Mat2c density_matrix(const BlochVector& s) {
    // rho = (I + s.sigma)/2
    return {cplx(0.5 * (1.0 + s.sz), 0.0), cplx(0.5 * s.sx, -0.5 * s.sy),
            cplx(0.5 * s.sx, 0.5 * s.sy), cplx(0.5 * (1.0 - s.sz), 0.0)};
}

struct EigenPair {
    std::array<double, 2> value;
    std::array<std::array<cplx, 2>, 2> vec;  // vec[k] is the k-th eigenvector
};

// Closed-form eigendecomposition of a Hermitian 2x2 matrix.
EigenPair eigh2(const Mat2c& h) {
    const double a = h.a00.real();
    const double d = h.a11.real();
    const cplx b = h.a01;
    const double mean = 0.5 * (a + d);
    const double half_gap = 0.5 * (a - d);
    const double radius = std::sqrt(half_gap * half_gap + std::norm(b));

    EigenPair out;
    out.value = {mean + radius, mean - radius};
    if (std::abs(b) > 0.0) {
        cplx x = b;
        cplx y = cplx(out.value[0] - a, 0.0);
        const double n = std::sqrt(std::norm(x) + std::norm(y));
        x /= n;
        y /= n;
        out.vec[0] = {x, y};
        out.vec[1] = {-std::conj(y), std::conj(x)};
    } else if (a >= d) {
        out.vec[0] = {cplx(1, 0), cplx(0, 0)};
        out.vec[1] = {cplx(0, 0), cplx(1, 0)};
    } else {
        out.vec[0] = {cplx(0, 0), cplx(1, 0)};
        out.vec[1] = {cplx(1, 0), cplx(0, 0)};
    }
    return out;
}

cplx sandwich(const std::array<cplx, 2>& bra, const Mat2c& m,
              const std::array<cplx, 2>& ket) {
    const cplx c0 = m.a00 * ket[0] + m.a01 * ket[1];
    const cplx c1 = m.a10 * ket[0] + m.a11 * ket[1];
    return std::conj(bra[0]) * c0 + std::conj(bra[1]) * c1;
}

Angles shifted(const Angles& angles, EstimableParameter param, double offset) {
    double theta = angles.theta();
    double phi = angles.phi();
    (param == EstimableParameter::Theta ? theta : phi) += offset;
    return Angles(theta, phi);
}

// Eigenvalue pairs with p_i + p_j at or below this are treated as the
// formula's excluded p_i + p_j = 0 terms.
constexpr double kPairCutoff = 1e-12;

}  // namespace

const char* to_string(EstimableParameter p) noexcept {
    return p == EstimableParameter::Theta ? "theta" : "phi";
}

const char* to_string(QfiBranch b) noexcept {
    return b == QfiBranch::Mixed ? "mixed" : "pure";
}

BlochVector d_initial_bloch(const Angles& angles, EstimableParameter param) {
    const double st = std::sin(angles.theta());
    const double ct = std::cos(angles.theta());
    const double sp = std::sin(angles.phi());
    const double cp = std::cos(angles.phi());
    if (param == EstimableParameter::Theta) return {ct * cp, ct * sp, st};
    return {-st * sp, st * cp, 0.0};
}

QfiResult qfi_bloch(const PulseConfig& cfg, double t, const Angles& angles,
                    EstimableParameter param, PropagatorMode mode) {
    const Propagator p = make_propagator(cfg, t, mode);
    const BlochVector s = evolve(p, initial_bloch(angles));
    const BlochVector ds = evolve(p, d_initial_bloch(angles, param));
    const double r = s.norm();
    if (r > 1.0 + kEpsPhys) {
        throw NonPhysicalError(r, "evolved bloch norm " + std::to_string(r) +
                                      " exceeds 1 + eps_phys; Fisher information "
                                      "is undefined for |s| > 1");
    }
    if (r >= 1.0 - kEpsPure) {
        return {dot(ds, ds), QfiBranch::Pure, r};
    }
    const double sd = dot(s, ds);
    return {sd * sd / (1.0 - r * r) + dot(ds, ds), QfiBranch::Mixed, r};
}

double qfi_spectral_oracle(const PulseConfig& cfg, double t, const Angles& angles,
                           EstimableParameter param, PropagatorMode mode,
                           double fd_step) {
    if (!(fd_step >= 1e-8 && fd_step <= 1e-3)) {
        throw std::invalid_argument("fd_step must be in [1e-8, 1e-3], got " +
                                    std::to_string(fd_step));
    }
    const double center =
        param == EstimableParameter::Theta ? angles.theta() : angles.phi();
    const double hi = param == EstimableParameter::Theta ? kPi : kTwoPi;
    if (center - fd_step < 0.0 || center + fd_step > hi) {
        throw DomainEdgeError("finite-difference stencil leaves the " +
                              std::string(to_string(param)) + " domain at " +
                              std::to_string(center));
    }

    const Propagator p = make_propagator(cfg, t, mode);
    const BlochVector s = evolve(p, initial_bloch(angles));
    const double r = s.norm();
    if (r > 1.0 + kEpsPhys) {
        throw NonPhysicalError(r, "evolved bloch norm " + std::to_string(r) +
                                      " exceeds 1 + eps_phys");
    }

    const BlochVector s_plus = evolve(p, initial_bloch(shifted(angles, param, fd_step)));
    const BlochVector s_minus = evolve(p, initial_bloch(shifted(angles, param, -fd_step)));
    const Mat2c rho_plus = density_matrix(s_plus);
    const Mat2c rho_minus = density_matrix(s_minus);
    const double inv = 1.0 / (2.0 * fd_step);
    const Mat2c drho = {(rho_plus.a00 - rho_minus.a00) * inv,
                        (rho_plus.a01 - rho_minus.a01) * inv,
                        (rho_plus.a10 - rho_minus.a10) * inv,
                        (rho_plus.a11 - rho_minus.a11) * inv};

    const EigenPair eig = eigh2(density_matrix(s));
    double fisher = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double weight = eig.value[i] + eig.value[j];
            if (weight <= kPairCutoff) continue;
            fisher += 2.0 * std::norm(sandwich(eig.vec[i], drho, eig.vec[j])) / weight;
        }
    }
    return fisher;
}

}  // namespace qpulse
