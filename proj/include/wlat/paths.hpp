#pragma once

/**
 * Path calculus: the one-step rule iterated t times is a sum over lattice
 * paths (sequences of step directions), each contributing the matrix
 * 2^{-N} P_{i_N} ... P_{i_1} (per-step weight 2/3 in the planar mode).
 * Because the projectors are rank one, P_i = |i><i|, every matrix element
 * collapses to a product of scalar transition amplitudes along the path --
 * so each path carries an amplitude determined entirely by how often and
 * which way it bends.
 *
 * In 4D under the all-phases-zero rule the amplitude of a path with B bends
 * and handed excess T (cyclic bends 1->3->2->1 minus their reverses, bends
 * through direction 4 neutral) is i^{+-T} 3^{-B/2} 2^{-N}.  In the planar
 * mode three natural spinor phase conventions give per-bend factors
 * exp(i pi/3)/2, exp(-i pi/3)/2 and -1/2; all agree in modulus, and closed
 * direction-loops of winding n carry phase (-1)^n under every convention.
 */

#include <vector>

#include "wlat/evolution.hpp"
#include "wlat/spin.hpp"
#include "wlat/types.hpp"

namespace wlat::paths {

/** A lattice path: the sequence of step directions (1-based). */
struct Path {
    std::vector<int> steps;

    int length() const { return static_cast<int>(steps.size()); }
};

/** All direction sequences of length n (4^n in 4D, 3^n planar).  Guards
 *  against runaway enumerations: n is capped at 10. */
std::vector<Path> enumerate_paths(int n_steps, Mode mode = Mode::FourD);

/** All paths from the origin to a displacement (fixed step counts);
 *  multinomial count.  Total steps capped at 10. */
std::vector<Path> paths_to_displacement(const evolution::Site& d, Mode mode = Mode::FourD);

/** Number of paths to a displacement (multinomial coefficient). */
std::size_t path_count(const evolution::Site& d, Mode mode = Mode::FourD);

/** Matrix amplitude of one path: w^N Q_{i_N} ... Q_{i_1} with per-step
 *  weight w = 1/2 (4D) or 2/3 (planar) and Q = P or Pbar by chirality. */
SpinMatrix amplitude_matrix(const Path& p, Chirality chirality = Chirality::Right,
                            Mode mode = Mode::FourD);

struct PathStats {
    int n_steps{};       // N
    int n_bends{};       // B: consecutive steps that change direction
    int handed_excess{}; // T: +1 per bend in {1->3, 3->2, 2->1}, -1 per reverse,
                         //    0 for any bend through direction 4
};

PathStats path_stats(const Path& p);

/** Closed-form 4D path amplitude from the stats alone (all-phases-zero
 *  rule, interior bends only): i^T 3^{-B/2} 2^{-N} for right-handed paths,
 *  i^{-T} 3^{-B/2} 2^{-N} for left-handed. */
cplx bend_rule_amplitude(const PathStats& s, Chirality chirality = Chirality::Right);

/** Scalar amplitude <out| w^N Q_{i_N} ... Q_{i_1} |in> written as the
 *  product of transition amplitudes along the path, with eigenspinor
 *  end caps for the given in/out directions and phase rule. */
cplx scalar_amplitude(const Path& p, int dir_in, int dir_out, spin::PhaseRule rule,
                      Chirality chirality = Chirality::Right);

/** Planar spinor phase conventions (all rephasings of the same physical
 *  eigenspinors of the planar projectors):
 *  ChiralPlus  (1, q_i)/sqrt2 with q_i the cube roots of unity:
 *              clockwise bends carry exp(+i pi/3)/2;
 *  ChiralMinus (q_i*, 1)/sqrt2: clockwise bends carry exp(-i pi/3)/2;
 *  Symmetric   (q_i, q_i*)/sqrt2: every bend carries -1/2. */
enum class PlanarVariant { ChiralPlus, ChiralMinus, Symmetric };

Spinor planar_spinor(int i, PlanarVariant variant);

/** <to|from> between planar spinors of one convention. */
cplx planar_transition(int from, int to, PlanarVariant variant);

/** Product of planar transition amplitudes along a path (no step weights;
 *  straight continuations contribute 1).  With `closed` the wrap-around
 *  bend from the last step back to the first is included. */
cplx planar_bend_product(const Path& p, PlanarVariant variant, bool closed = false);

/** Net turn excess p - q (counterclockwise minus clockwise bends) of a
 *  planar path; for closed paths this is divisible by 3 and the direction
 *  winding number is (p - q)/3. */
int planar_turn_excess(const Path& p, bool closed = false);

/** Direction winding number of a closed planar path. */
int planar_winding(const Path& p);

}  // namespace wlat::paths
