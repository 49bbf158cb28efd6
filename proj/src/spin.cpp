#include "wlat/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace wlat::spin {

namespace {

const cplx kI{0.0, 1.0};

void check_direction(int i, Mode mode, const char* who) {
    const int n = geometry::direction_count(mode);
    if (i < 1 || i > n)
        throw std::invalid_argument(std::string(who) + ": direction index out of range");
}

}  // namespace

SpinMatrix pauli(int a) {
    switch (a) {
        case 1: return {0.0, 1.0, 1.0, 0.0};
        case 2: return {0.0, -kI, kI, 0.0};
        case 3: return {1.0, 0.0, 0.0, -1.0};
        default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
}

SpinMatrix pauli_dot(const geometry::Vec3& v) {
    return {cplx(v.z, 0.0), cplx(v.x, -v.y), cplx(v.x, v.y), cplx(-v.z, 0.0)};
}

SpinMatrix projector(int i, Mode mode) {
    check_direction(i, mode, "projector");
    const auto& n = geometry::tetrad(mode)[i - 1];
    return 0.5 * (SpinMatrix::identity() + pauli_dot(n));
}

SpinMatrix anti_projector(int i, Mode mode) {
    check_direction(i, mode, "anti_projector");
    const auto& n = geometry::tetrad(mode)[i - 1];
    return 0.5 * (SpinMatrix::identity() - pauli_dot(n));
}

SpinMatrix step_projector(int i, Chirality chirality, Mode mode) {
    return chirality == Chirality::Right ? projector(i, mode) : anti_projector(i, mode);
}

SpinMatrix step_weight(int i, double alpha, Mode mode) {
    check_direction(i, mode, "step_weight");
    if (!(alpha > 0.0)) throw std::invalid_argument("step_weight: alpha must be positive");
    const double s = geometry::marginal_speed(mode);
    const auto& n = geometry::tetrad(mode)[i - 1];
    return 0.5 * (SpinMatrix::identity() + (s / alpha) * pauli_dot(n));
}

double sigma_identity_residual(double alpha, Mode mode) {
    const int cnt = geometry::direction_count(mode);
    const double c = (mode == Mode::FourD) ? 0.5 : 2.0 / 3.0;
    const auto steps = geometry::step_vectors(alpha, mode);

    // The planar tetrad spans only (t, x, y); sigma_3 is not reconstructed.
    const int components = (mode == Mode::FourD) ? 4 : 3;
    double r = 0.0;
    for (int mu = 0; mu < components; ++mu) {
        SpinMatrix sum = SpinMatrix::zero();
        for (int i = 1; i <= cnt; ++i) {
            const auto& nv = steps[i - 1];
            const double comp = (mu == 0) ? nv.t : (mu == 1) ? nv.x : (mu == 2) ? nv.y : nv.z;
            sum += comp * step_weight(i, alpha, mode);
        }
        const SpinMatrix sigma = (mu == 0) ? SpinMatrix::identity() : pauli(mu);
        r = std::max(r, max_abs_diff(c * sum, sigma));
    }
    return r;
}

double projector_identities_residual(Mode mode) {
    const int cnt = geometry::direction_count(mode);
    const double c = (mode == Mode::FourD) ? 0.5 : 2.0 / 3.0;

    double r = 0.0;
    SpinMatrix sum = SpinMatrix::zero();
    for (int i = 1; i <= cnt; ++i) {
        const auto p = projector(i, mode);
        const auto q = anti_projector(i, mode);
        r = std::max(r, max_abs_diff(p * p, p));
        r = std::max(r, max_abs_diff(q * q, q));
        r = std::max(r, max_abs_diff(p + q, SpinMatrix::identity()));
        r = std::max(r, max_abs_diff(q * p, SpinMatrix::zero()));
        r = std::max(r, max_abs_diff(p * q, SpinMatrix::zero()));
        sum += p;
    }
    r = std::max(r, max_abs_diff(c * sum, SpinMatrix::identity()));
    return r;
}

Spinor eigenspinor(int i, PhaseRule rule, Chirality chirality) {
    check_direction(i, Mode::FourD, "eigenspinor");
    Spinor v;
    if (i == 4) {
        v = Spinor{1.0, 0.0};
        if (rule == PhaseRule::A) v = kI * v;  // gauge phase pi/2 on direction 4
    } else {
        const double phi = (i == 1) ? 0.0 : (i == 2) ? 2.0 * M_PI / 3.0 : -2.0 * M_PI / 3.0;
        const double s3 = std::sqrt(3.0);
        v = Spinor{cplx(1.0 / s3, 0.0),
                   std::sqrt(2.0) / s3 * std::exp(kI * phi)};
    }
    return chirality == Chirality::Right ? v : charge_conjugate(v);
}

cplx transition(int from, int to, PhaseRule rule, Chirality chirality) {
    return inner(eigenspinor(to, rule, chirality), eigenspinor(from, rule, chirality));
}

Spinor charge_conjugate(const Spinor& psi) {
    return {std::conj(psi.c1), -std::conj(psi.c0)};
}

double conjugation_residual() {
    const Spinor basis[2] = {Spinor{1.0, 0.0}, Spinor{0.0, 1.0}};
    double r = 0.0;
    for (const auto& e : basis) {
        const auto cc = charge_conjugate(charge_conjugate(e));
        r = std::max(r, max_abs_diff(cc, -e));
        for (int i = 1; i <= 4; ++i) {
            const auto p = projector(i, Mode::FourD);
            const auto q = anti_projector(i, Mode::FourD);
            r = std::max(r, max_abs_diff(charge_conjugate(p * e), q * charge_conjugate(e)));
            r = std::max(r, max_abs_diff(p * charge_conjugate(e), charge_conjugate(q * e)));
        }
    }
    return r;
}

PhaseCertificate phase_obstruction_certificate() {
    PhaseCertificate cert{};
    cert.cycle_product = transition(1, 2, PhaseRule::B) * transition(2, 3, PhaseRule::B) *
                         transition(3, 1, PhaseRule::B);
    const cplx want = kI / std::sqrt(3.0);
    cert.required = want * want * want;
    cert.consistent = std::abs(cert.cycle_product - cert.required) < 1e-12;
    return cert;
}

}  // namespace wlat::spin
