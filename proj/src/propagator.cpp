#include "wlat/propagator.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "wlat/numerics.hpp"
#include "wlat/paths.hpp"
#include "wlat/spectral.hpp"
#include "wlat/spin.hpp"

namespace wlat::propagator {

namespace {

const cplx kI{0.0, 1.0};

std::array<SpinMatrix, 4> step_matrices(Chirality chirality) {
    std::array<SpinMatrix, 4> q;
    for (int i = 1; i <= 4; ++i)
        q[i - 1] = spin::step_projector(i, chirality, Mode::FourD);
    return q;
}

}  // namespace

KernelTable kernel_dp(int t, Chirality chirality) {
    if (t < 0) throw std::invalid_argument("kernel_dp: t must be >= 0");
    const auto q = step_matrices(chirality);

    KernelTable k;
    k.time = 0;
    k.chirality = chirality;
    k.entries[{0, 0, 0, 0}] = SpinMatrix::identity();

    for (int step = 0; step < t; ++step) {
        std::set<Site> keys;
        for (const auto& [site, m] : k.entries) {
            (void)m;
            for (int i = 0; i < 4; ++i) {
                Site s = site;
                ++s[i];
                keys.insert(s);
            }
        }
        KernelTable next;
        next.time = k.time + 1;
        next.chirality = chirality;
        for (const Site& x : keys) {
            SpinMatrix acc = SpinMatrix::zero();
            for (int i = 0; i < 4; ++i) {
                Site src = x;
                --src[i];
                if (src[i] < 0) continue;
                const auto it = k.entries.find(src);
                if (it != k.entries.end()) acc += q[i] * it->second;
            }
            next.entries[x] = 0.5 * acc;
        }
        k = std::move(next);
    }
    return k;
}

SpinMatrix kernel_pathsum(const Site& d, Chirality chirality) {
    for (int c : d)
        if (c < 0) return SpinMatrix::zero();  // retarded support
    if (d[0] + d[1] + d[2] + d[3] == 0) return SpinMatrix::identity();
    SpinMatrix acc = SpinMatrix::zero();
    for (const auto& p : paths::paths_to_displacement(d, Mode::FourD))
        acc += paths::amplitude_matrix(p, chirality, Mode::FourD);
    return acc;
}

SpinMatrix kernel_fourier(const Site& d, int t, int grid, Chirality chirality) {
    if (t < 0) throw std::invalid_argument("kernel_fourier: t must be >= 0");
    if (grid < t + 1)
        throw std::invalid_argument(
            "kernel_fourier: grid must be at least t + 1 (smaller grids alias)");

    // A(theta)^t only contains Fourier modes with every count in [0, t], so
    // displacements outside that block are exactly zero; computing them via
    // the DFT would alias onto modes inside the block instead.
    for (int c : d)
        if (c < 0 || c > t) return SpinMatrix::zero();

    const auto q = step_matrices(chirality);
    const int m = grid;
    SpinMatrix acc = SpinMatrix::zero();
    std::array<double, 4> theta{};
    for (int j0 = 0; j0 < m; ++j0) {
        theta[0] = 2.0 * M_PI * j0 / m;
        for (int j1 = 0; j1 < m; ++j1) {
            theta[1] = 2.0 * M_PI * j1 / m;
            for (int j2 = 0; j2 < m; ++j2) {
                theta[2] = 2.0 * M_PI * j2 / m;
                for (int j3 = 0; j3 < m; ++j3) {
                    theta[3] = 2.0 * M_PI * j3 / m;
                    SpinMatrix a = SpinMatrix::zero();
                    for (int i = 0; i < 4; ++i) a += std::exp(kI * theta[i]) * q[i];
                    a = 0.5 * a;
                    SpinMatrix p = SpinMatrix::identity();
                    for (int s = 0; s < t; ++s) p = a * p;
                    const double dot = theta[0] * d[0] + theta[1] * d[1] +
                                       theta[2] * d[2] + theta[3] * d[3];
                    acc += std::exp(-kI * dot) * p;
                }
            }
        }
    }
    const double cells = std::pow(static_cast<double>(m), 4);
    return (1.0 / cells) * acc;
}

SpinMatrix displacement_sum(const KernelTable& k) {
    SpinMatrix acc = SpinMatrix::zero();
    for (const auto& [site, m] : k.entries) {
        (void)site;
        acc += m;
    }
    return acc;
}

double frobenius_sum(const KernelTable& k) {
    double s = 0.0;
    for (const auto& [site, m] : k.entries) {
        (void)site;
        s += m.frobenius2();
    }
    return s;
}

ConvergenceReport continuum_convergence(const geometry::Vec3& k_cov, double eps0,
                                        int halvings) {
    if (!(eps0 > 0.0))
        throw std::invalid_argument("continuum_convergence: eps0 must be positive");
    if (halvings < 1)
        throw std::invalid_argument("continuum_convergence: need at least 1 halving");

    ConvergenceReport rep;
    rep.target = k_cov.norm();
    std::vector<double> xs, ys;
    for (int j = 0; j <= halvings; ++j) {
        const double eps = eps0 / std::pow(2.0, j);
        const auto disp = spectral::dispersion(k_cov, eps);
        // Propagating branch: the one with the larger (positive) frequency.
        const double w0 = disp.branch[0].omega.real();
        const double w1 = disp.branch[1].omega.real();
        const double re = std::max(w0, w1);
        ConvergenceRow row;
        row.epsilon = eps;
        row.re_omega = re;
        row.deviation = std::abs(std::abs(re) - rep.target);
        rep.rows.push_back(row);
        if (row.deviation > 0.0) {
            xs.push_back(eps);
            ys.push_back(row.deviation);
        }
    }
    rep.fitted_order = (xs.size() == rep.rows.size() && xs.size() >= 2)
                           ? numerics::log_log_slope(xs, ys)
                           : 0.0;
    return rep;
}

}  // namespace wlat::propagator
