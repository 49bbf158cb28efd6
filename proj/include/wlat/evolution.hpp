#pragma once

/**
 * One-step lattice dynamics.  A time slice assigns a spinor to every
 * occupied site, indexed by its displacement counts from the source.  The
 * massless update is
 *
 *     psi(x) = 1/2 sum_i Q_i psi(x - step_i),
 *
 * with Q_i = P_i (right-handed) or Pbar_i (left-handed).  The mass couplings
 * insert, per step, either the opposite-chirality partner (Dirac) or the
 * charge conjugate of the field itself (Majorana) with weight i epsilon m.
 *
 * The update is not unitary: a unit delta source halves its norm in one
 * step, and the lost norm shows up as overlap between neighboring evolved
 * states rather than disappearing.
 */

#include <map>

#include "wlat/geometry.hpp"
#include "wlat/numerics.hpp"
#include "wlat/types.hpp"

namespace wlat::evolution {

using Site = std::array<int, 4>;  // displacement counts; lexicographic key order

struct SliceField {
    int time = 0;
    Chirality chirality = Chirality::Right;
    std::map<Site, Spinor> values;
};

/** Field concentrated at the origin of the cone (all counts zero). */
SliceField delta_source(const Spinor& psi, Chirality chirality = Chirality::Right);

/** One massless step.  Every site key of the result has non-negative counts
 *  summing to time + 1; contributions are gathered in fixed direction order,
 *  so results are deterministic. */
SliceField step_weyl(const SliceField& f);

double norm2(const SliceField& f);

/** Slice inner product sum_x <f(x), g(x)> (conjugating f). */
cplx overlap(const SliceField& f, const SliceField& g);

/** Coupled right/left pair evolved with the Dirac mass term:
 *  R' = 1/2 sum_i P_i (R + i eps m L), L' = 1/2 sum_i Pbar_i (L + i eps m R). */
struct DiracField {
    SliceField right;  // chirality Right
    SliceField left;   // chirality Left
    double mass = 0.0;
    double epsilon = 1.0;
};

DiracField dirac_delta_source(const Spinor& r, const Spinor& l, double mass, double epsilon);
DiracField step_dirac(const DiracField& f);
double norm2(const DiracField& f);

/** Order of the Majorana mass insertion relative to the propagation step:
 *  ConjugateFirst applies psi + i eps m C psi before projecting,
 *  PropagateFirst projects first and conjugates the result.  Both are
 *  real-linear (not complex-linear) updates. */
enum class MajoranaOrder { ConjugateFirst, PropagateFirst };

struct MajoranaField {
    SliceField field;
    double mass = 0.0;
    double epsilon = 1.0;
    MajoranaOrder order = MajoranaOrder::ConjugateFirst;
};

MajoranaField majorana_delta_source(const Spinor& psi, double mass, double epsilon,
                                    MajoranaOrder order = MajoranaOrder::ConjugateFirst);
MajoranaField step_majorana(const MajoranaField& f);

/** Periodic wrapper: spinors on the 4-torus of step counts modulo `period`.
 *  Plane waves live here when their phases are commensurate with the wrap. */
struct TorusField {
    int period = 0;
    Chirality chirality = Chirality::Right;
    std::vector<Spinor> data;  // size period^4, row-major in the four counts

    Spinor& at(int c0, int c1, int c2, int c3);
    const Spinor& at(int c0, int c1, int c2, int c3) const;
};

/** Plane wave exp(-i sum_j theta_j c_j) psi0 on the torus.  The phases
 *  theta_j = 3 epsilon k . n_j must each be a multiple of 2 pi / period
 *  within 1e-9, else the wave does not fit the wrap and the call is
 *  rejected with std::invalid_argument. */
TorusField plane_wave(const geometry::Vec3& k_cov, double epsilon, int period,
                      const Spinor& psi0);

/** One massless step with periodic wrapping. */
TorusField step_weyl_torus(const TorusField& f);

double norm2(const TorusField& f);

/** Evolves the requested eigenvector branch of A(theta(k)) as a torus plane
 *  wave for `steps` steps and returns the measured per-step multiplier
 *  (the slice-to-slice projection coefficient, which must reproduce the
 *  spectral eigenvalue).  At a degenerate point (e.g. k = 0, where A is the
 *  identity) both branches share one eigenvalue and that value is measured.
 *  Throws std::invalid_argument for incommensurate wavevectors. */
cplx plane_wave_multiplier(const geometry::Vec3& k_cov, double epsilon, int steps,
                           int period, int branch = 0);

/** The 4x4 one-step transfer matrix of the Dirac pair in the plane-wave
 *  sector of k, measured by applying the coupled step rule to the four basis
 *  waves (R = e1, R = e2, L = e1, L = e2) on a local lattice patch and
 *  stripping the carrier phase.  Works for any wavevector (no wrap is
 *  involved).  Its eigenvalues exp(-i omega eps) carry the massive
 *  dispersion omega -> +-sqrt(k^2 + m^2). */
numerics::Mat4 dirac_transfer(const geometry::Vec3& k_cov, double epsilon, double mass);

/** Covariant spatial wavevector whose per-direction phases are
 *  theta_j = 2 pi m_j / period for j = 1..3 (and automatically
 *  theta_4 = -(theta_1+theta_2+theta_3)): the commensurate waves that fit a
 *  torus of the given period at time step epsilon. */
geometry::Vec3 commensurate_wavevector(const std::array<int, 3>& m, int period,
                                       double epsilon);

}  // namespace wlat::evolution
