#pragma once

/**
 * Spectral theory of the one-step amplification matrix
 *
 *     A(theta) = 1/2 sum_j W_j exp(i theta_j),
 *
 * where theta_j = epsilon k . (alpha n_j) are the per-direction phases of a
 * plane wave and W_j are the step weights (the projectors at alpha = 3).
 * A plane wave evolves by one eigenvalue of A per step, lambda =
 * exp(-i omega epsilon), so the eigenvalue cloud over the constrained torus
 * sum_j theta_j = 0 is the full dispersion content of the scheme.
 *
 * Key structural facts probed here: eigenvalues stay inside the closed unit
 * disk exactly when alpha >= 3; unit-modulus (real-frequency) eigenvalues
 * occur only where at least three of the four phases coincide; and on the
 * real axis the eigenvalue moduli jump from 1 down to at most 1/sqrt(3) --
 * a spectral gap that separates the physical branch from the doublers.
 */

#include <array>
#include <vector>

#include "wlat/geometry.hpp"
#include "wlat/types.hpp"

namespace wlat::spectral {

/** Four plane-wave phases, one per step direction, each in [-pi, pi).
 *  Constrained quads satisfy sum_j theta_j = 0 (mod 2 pi), the condition for
 *  the phases to come from a single spatial wavevector. */
struct ThetaQuad {
    std::array<double, 4> theta{};
    bool constrained{};

    /** Builds a constrained quad from three free phases; theta_4 is fixed to
     *  -(t1 + t2 + t3), wrapped into [-pi, pi). */
    static ThetaQuad sum_zero(double t1, double t2, double t3);

    /** Wraps four independent phases (no constraint imposed). */
    static ThetaQuad free(const std::array<double, 4>& t);

    /** Residual of the sum constraint (0 for free quads). */
    double constraint_residual() const;
};

/** One-step amplification matrix at the given phases and step speed. */
SpinMatrix amplification(const ThetaQuad& q, double alpha = 3.0);

/** Eigenvalues and eigenvectors of a 2x2 matrix in closed form.  Eigenvalues
 *  are ordered by modulus (descending), then by real part, then by imaginary
 *  part; each key is compared with a 1e-12 tolerance so that conjugate pairs
 *  (equal moduli up to rounding) order deterministically.  When
 *  |tr^2 - 4 det| < 1e-14 the root is treated as repeated: both slots carry
 *  tr/2, `degenerate` is set, and for a defective matrix both eigenvector
 *  slots hold the single eigenvector. */
struct EigenPair {
    std::array<cplx, 2> lambda{};
    std::array<Spinor, 2> vec{};
    bool degenerate{};
};

EigenPair eigen_decompose(const SpinMatrix& m);

/** det(A(theta)^dag A(theta) - 1) evaluated directly (alpha = 3).  Negative
 *  exactly when the operator norm of A exceeds 1. */
double phi_direct(const ThetaQuad& q);

/** The same determinant through its closed form
 *  (1/18) sum over the three pair partitions {(ij)(kl)} of
 *  (1 - cos(theta_i - theta_j)) (1 - cos(theta_k - theta_l)),
 *  manifestly >= 0: the norm bound at alpha = 3 in one line. */
double phi_closed(const ThetaQuad& q);

/** tr(A^dag A) = 1 + (1/6) sum over pairs cos(theta_i - theta_j); at most 2,
 *  with equality only when all phases coincide. */
double trace_gram(const ThetaQuad& q);

struct ScanRow {
    std::array<double, 4> theta{};
    cplx lambda;
    int branch{};  // 0 = first (larger-modulus) eigenvalue, 1 = second
};

struct ScanConfig {
    int grid{};                // M equally spaced phases per free angle
    bool constrained = true;   // sweep theta_1..3 with theta_4 dependent
    int exclude_center = 0;    // drop this many theta_1 grid values centered on 0
    double alpha = 3.0;
};

/** Eigenvalues of A over a uniform grid on the (constrained) phase torus.
 *  Emits both branches at every grid point, in row-major grid order.  The
 *  optional exclusion window removes the `exclude_center` theta_1 values
 *  nearest 0 (odd counts are symmetric around 0), which empties a
 *  neighborhood of zero frequency from the cloud. */
std::vector<ScanRow> spectrum_scan(const ScanConfig& cfg);

struct RealAxisGap {
    double grid_value{};                  // max real eigenvalue on the scan
    std::array<double, 4> argmax{};       // where the grid maximum occurred
    double refined_value{};               // after local refinement
    std::array<double, 4> refined_theta{};
};

/** Largest eigenvalue on the real axis strictly inside the unit circle
 *  (|Im lambda| < 1e-9, |lambda| < 1 - 1e-9) over a constrained scan,
 *  followed by a local refinement.  The refinement moves along the
 *  two-parameter family theta = (u, -u, w, -w) (up to index pairing) that
 *  contains the grid argmax; on that family the trace and determinant of A
 *  are real, so the real-axis constraint is preserved exactly while u and w
 *  are polished by compass search.  The maximum sits at (0, 0, pi, pi) with
 *  value 1/sqrt(3). */
RealAxisGap real_axis_gap(int grid, double alpha = 3.0);

struct DispersionBranch {
    cplx lambda;            // per-step multiplier
    cplx omega;             // (i/epsilon) Log lambda, principal branch
    bool real_frequency{};  // |lambda| = 1 within 1e-10
    bool infinite_decay{};  // lambda = 0: frequency has no finite value
};

struct DispersionResult {
    std::array<double, 4> theta{};
    std::array<DispersionBranch, 2> branch{};
    bool three_coincident{};  // at least three phases equal (mod 2pi, 1e-9)
};

/** Dispersion data for a spatial covariant wavevector k at time step
 *  epsilon: phases theta_j = 3 epsilon k . n_j, eigenvalues of A, and the
 *  frequencies omega = (i/epsilon) Log lambda with Re omega in
 *  (-pi/epsilon, pi/epsilon] and Im omega <= 0. */
DispersionResult dispersion(const geometry::Vec3& k_cov, double epsilon);

struct NormBoundReport {
    double alpha{};
    int grid{};
    double max_abs_lambda{};
    std::array<double, 4> argmax{};
    bool exceeds_bound{};  // max |lambda| > 1 + 1e-9
};

/** Scans the constrained grid at the given step speed and reports the
 *  largest eigenvalue modulus.  Below the marginal speed (alpha < 3) the
 *  bound fails -- the scheme is unstable -- while alpha >= 3 keeps every
 *  eigenvalue inside the closed unit disk. */
NormBoundReport norm_bound_probe(double alpha, int grid);

}  // namespace wlat::spectral
