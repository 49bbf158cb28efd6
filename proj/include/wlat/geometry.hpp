#pragma once

/**
 * Lattice geometry: the tetrad of unit step directions, the lightlike step
 * 4-vectors built from them, face normals, displacement coordinates, and the
 * physical scales (lattice spacing, cell volume, wavevector Jacobian).
 *
 * The time-diagonal lattice advances every site by one time step epsilon
 * while moving it spatially by alpha * epsilon along one of the unit
 * directions.  In four dimensions there are four such directions with
 * pairwise dot products -1/3 (vertices of a regular tetrahedron); in the
 * planar 2+1-dimensional variant there are three directions at mutual angles
 * of 120 degrees.  Metric signature is (+,-,-,-).
 */

#include <array>
#include <vector>

#include "wlat/types.hpp"

namespace wlat::geometry {

struct Vec3 {
    double x{}, y{}, z{};

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
};

inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

struct Vec4 {
    double t{}, x{}, y{}, z{};

    Vec4 operator+(const Vec4& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    Vec4 operator-(const Vec4& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    Vec3 spatial() const { return {x, y, z}; }

    /** Minkowski inner product with signature (+,-,-,-). */
    double minkowski_dot(const Vec4& o) const {
        return t * o.t - x * o.x - y * o.y - z * o.z;
    }
    double minkowski_norm2() const { return minkowski_dot(*this); }
};

inline Vec4 operator*(double s, const Vec4& v) { return {s * v.t, s * v.x, s * v.y, s * v.z}; }

/** Number of step directions: 4 in FourD mode, 3 in Planar mode. */
int direction_count(Mode mode);

/** The marginal step speed for the mode: 3 in FourD, 2 in Planar.  At this
 *  speed the step 4-vectors are null and the one-step scheme sits exactly on
 *  its stability boundary. */
double marginal_speed(Mode mode);

/** Unit step directions.  FourD: four tetrahedral vectors with pairwise dot
 *  -1/3, zero sum, and sum_i n_i^a n_i^b = (4/3) delta^{ab}.  Planar: three
 *  unit vectors in the xy-plane at angles 0, +120deg, -120deg (pairwise dot
 *  -1/2, zero sum).  Indexing is 1-based throughout the library; entry k of
 *  the returned vector is direction k+1. */
const std::vector<Vec3>& tetrad(Mode mode);

/** Maximum residual over all tetrad defining identities (unit norms,
 *  pairwise dots, zero sum, second-moment isotropy).  Exact construction
 *  keeps this at rounding level; exposed for self-checks. */
double tetrad_residual(Mode mode);

/** Step 4-vectors N_i = (1, alpha * n_i).  Requires alpha > 0. */
std::vector<Vec4> step_vectors(double alpha, Mode mode);

struct FaceReport {
    Vec4 normal;                       // k = sum of the three face step vectors
    double minkowski_norm2{};          // equals 9 - alpha^2
    std::array<double, 3> step_dots{}; // k . N_i for the three face directions
};

/** Normal data for the lattice hyperplane spanned by three step directions
 *  (4D mode).  `face` lists three distinct direction indices in 1..4.  At
 *  the marginal speed alpha = 3 the normal is null and orthogonal to all
 *  three spanning steps. */
FaceReport face_null_normal(const std::array<int, 3>& face, double alpha);

/** Integer step counts along the four directions; a site of the causal cone
 *  of the origin after time() = sum of counts steps.  Planar-mode users keep
 *  counts[3] == 0. */
struct Displacement {
    std::array<int, 4> counts{};

    int time() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
    bool operator==(const Displacement&) const = default;
};

struct LatticeScales {
    double epsilon{};           // time step
    double alpha{};             // step speed
    double spacing{};           // spatial step length a = alpha * epsilon
    double volume_per_point{};  // fcc cell volume 16/(3 sqrt 3) * a^3
};

/** Derived scales for a given time step and step speed (both positive). */
LatticeScales lattice_scales(double epsilon, double alpha);

/** Volume per site of the fcc spatial lattice with nearest-neighbor spacing
 *  `spacing`: 16/(3 sqrt 3) * spacing^3. */
double fcc_volume_per_point(double spacing);

/** Spacetime position of a displacement: epsilon * sum_i counts[i] * N_i. */
Vec4 embed(const Displacement& d, double epsilon, double alpha);

struct InvertResult {
    Displacement displacement;  // nearest integer counts
    double residual{};          // max distance of a solved count from that integer
    bool on_lattice{};          // residual <= 1e-9
};

/** Recovers step counts from a spacetime position by solving the 4x4 linear
 *  system in the step vectors; reports how far the solution is from integer
 *  counts.  4D mode. */
InvertResult invert(const Vec4& x, double epsilon, double alpha);

/** Per-direction wavevector components k_i = k_mu N_i^mu (plain contraction
 *  of the covariant components with the step 4-vectors). */
std::array<double, 4> wavevector_to_lattice(const Vec4& k_cov, double alpha = 3.0);

/** Jacobian |det(d k_i / d k_mu)| of that map; 48 sqrt 3 at alpha = 3. */
double wavevector_jacobian(double alpha = 3.0);

}  // namespace wlat::geometry
