#pragma once

/**
 * Retarded lattice propagator: the matrix kernel K_t[d] that carries a
 * source spinor to displacement d after t steps,
 *
 *     K_t[d] = sum over paths to d of 2^{-t} Q_{i_t} ... Q_{i_1}.
 *
 * Three independent routes compute it: dynamic programming on the one-step
 * recursion, brute-force path summation, and Fourier synthesis from powers
 * of the amplification matrix.  The Fourier route is exact on any phase
 * grid with at least t + 1 points per angle because A(theta)^t is a
 * trigonometric polynomial of degree t with only non-negative modes.
 *
 * Support is retarded by construction (all counts non-negative), and the
 * displacement sum reproduces A(0)^t = 1 exactly.
 */

#include <map>
#include <vector>

#include "wlat/evolution.hpp"
#include "wlat/geometry.hpp"
#include "wlat/types.hpp"

namespace wlat::propagator {

using evolution::Site;

struct KernelTable {
    int time = 0;
    Chirality chirality = Chirality::Right;
    std::map<Site, SpinMatrix> entries;
};

/** Kernel at every displacement of the t-step cone, by iterating
 *  K_{t+1}[d] = 1/2 sum_i Q_i K_t[d - e_i] from K_0 = {origin: 1}. */
KernelTable kernel_dp(int t, Chirality chirality = Chirality::Right);

/** Kernel at one displacement by explicit path enumeration (t <= 10). */
SpinMatrix kernel_pathsum(const Site& d, Chirality chirality = Chirality::Right);

/** Kernel at one displacement via the inverse discrete Fourier transform of
 *  A(theta)^t over a uniform grid with `grid` points per angle.  Exact for
 *  grid >= t + 1; smaller grids alias and are rejected.  Displacements with
 *  any negative count return zero (retarded support). */
SpinMatrix kernel_fourier(const Site& d, int t, int grid,
                          Chirality chirality = Chirality::Right);

/** Sum of all kernel entries; equals the identity matrix for every t. */
SpinMatrix displacement_sum(const KernelTable& k);

/** Sum of squared Frobenius norms over the table.  Non-increasing in t
 *  (it is the phase-space average of |A(theta)^t|_F^2 and |A| <= 1). */
double frobenius_sum(const KernelTable& k);

struct ConvergenceRow {
    double epsilon{};
    double re_omega{};    // propagating-branch frequency at this step size
    double deviation{};   // | |Re omega| - |k| |
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double fitted_order{};  // log-log slope of deviation against epsilon
    double target{};        // |k|
};

/** Halves epsilon `halvings` times from eps0 and measures how fast the
 *  positive-frequency branch of the dispersion approaches the continuum
 *  light cone |k|. */
ConvergenceReport continuum_convergence(const geometry::Vec3& k_cov, double eps0,
                                        int halvings);

}  // namespace wlat::propagator
