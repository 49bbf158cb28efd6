#pragma once

/**
 * Spin-projector calculus.  Each step direction n_i carries the rank-one
 * projector P_i = (1 + n_i . sigma)/2 onto spin-up along n_i and its
 * complement Pbar_i = (1 - n_i . sigma)/2.  The identity
 *
 *     sigma^mu = c * sum_i W_i N_i^mu,   W_i = (1 + (s/alpha) n_i . sigma)/2,
 *
 * with (c, s) = (1/2, 3) in 4D and (2/3, 2) in the planar mode, is what lets
 * a first-order differencing of the Weyl equation distribute the update over
 * the step directions; at the marginal speed alpha = s the weights W_i are
 * exactly the projectors.
 *
 * Eigenspinors of the projectors are fixed only up to a phase per direction;
 * the two named phase rules pin them down and determine the transition
 * amplitudes <to|from> used by the path calculus.
 */

#include "wlat/geometry.hpp"
#include "wlat/types.hpp"

namespace wlat::spin {

/** Pauli matrix sigma_a for a in 1..3. */
SpinMatrix pauli(int a);

/** v . sigma for a real 3-vector v. */
SpinMatrix pauli_dot(const geometry::Vec3& v);

/** Spin projector P_i = (1 + n_i . sigma)/2 for direction i (1-based). */
SpinMatrix projector(int i, Mode mode = Mode::FourD);

/** Complementary projector Pbar_i = (1 - n_i . sigma)/2. */
SpinMatrix anti_projector(int i, Mode mode = Mode::FourD);

/** P_i for right-handed propagation, Pbar_i for left-handed. */
SpinMatrix step_projector(int i, Chirality chirality, Mode mode = Mode::FourD);

/** Off-marginal step weight W_i = (1 + (s/alpha) n_i . sigma)/2 where s is
 *  the mode's marginal speed.  Reduces to projector(i) at alpha = s. */
SpinMatrix step_weight(int i, double alpha, Mode mode = Mode::FourD);

/** Max entrywise residual of sigma^mu = c * sum_i W_i N_i^mu over all mu,
 *  with N_i the alpha step vectors.  Holds for every alpha > 0. */
double sigma_identity_residual(double alpha, Mode mode = Mode::FourD);

/** Max residual over the projector family identities: idempotence,
 *  complementarity P_i + Pbar_i = 1, annihilation Pbar_i P_i = 0, and the
 *  resolution c * sum_i P_i = 1. */
double projector_identities_residual(Mode mode = Mode::FourD);

/** Phase conventions for the projector eigenspinors (4D).
 *  RuleA: direction 4 carries phase pi/2, the rest 0; this makes the six
 *  transitions 4->1, 4->2, 4->3, 1->3, 3->2, 2->1 all equal +i/sqrt(3).
 *  RuleB: all phases 0; transitions to or from direction 4 become real
 *  1/sqrt(3) while bends within {1,2,3} keep their +-i/sqrt(3) phases. */
enum class PhaseRule { A, B };

/** Unit eigenspinor |i> of P_i (right) or of Pbar_i (left; the charge
 *  conjugate of the right one) under the given phase rule.  4D mode. */
Spinor eigenspinor(int i, PhaseRule rule, Chirality chirality = Chirality::Right);

/** Transition amplitude <to|from> between step-direction eigenspinors under
 *  a phase rule.  Left-handed amplitudes are the complex conjugates. */
cplx transition(int from, int to, PhaseRule rule, Chirality chirality = Chirality::Right);

/** Charge conjugation C psi = i sigma_y psi* (antilinear).  C^2 = -1, and
 *  C intertwines the projectors: C P_i = Pbar_i C. */
Spinor charge_conjugate(const Spinor& psi);

/** Max residual over the conjugation relations (C^2 = -1, C P_i = Pbar_i C,
 *  P_i C = C Pbar_i) evaluated on a spinor basis. */
double conjugation_residual();

/** Certificate that no assignment of per-direction phases can make the
 *  three bends 1 -> 2 -> 3 -> 1 all carry the amplitude +i/sqrt(3).  The
 *  product of transition amplitudes around that closed cycle is invariant
 *  under rephasing (each phase enters once with either sign) and evaluates
 *  to +i/(3 sqrt 3), while a uniform +i/sqrt(3) assignment would cube to
 *  -i/(3 sqrt 3).  Only the reversed orientation 1 -> 3 -> 2 -> 1 can be
 *  made uniformly +i/sqrt(3), which is what PhaseRule::A does. */
struct PhaseCertificate {
    cplx cycle_product;  // invariant product around 1 -> 2 -> 3 -> 1
    cplx required;       // (i/sqrt3)^3, what a uniform assignment implies
    bool consistent;     // false: the obstruction is unavoidable
};

PhaseCertificate phase_obstruction_certificate();

}  // namespace wlat::spin
