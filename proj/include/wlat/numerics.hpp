#pragma once

/**
 * Small self-contained numerical helpers: angle wrapping, dense linear solves
 * of tiny systems, characteristic polynomials and root finding for 4x4
 * complex matrices, and a log-log slope fit for empirical convergence orders.
 */

#include <array>
#include <complex>
#include <vector>

#include "wlat/types.hpp"

namespace wlat::numerics {

/** Wraps an angle into [-pi, pi). */
double wrap_angle(double theta);

/** Solves the n x n real system A x = b by Gaussian elimination with partial
 *  pivoting.  Throws invariant_violation("singular-linear-system") if the
 *  matrix is numerically singular. */
std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b);

using Mat4 = std::array<std::array<cplx, 4>, 4>;

/** Monic characteristic polynomial of a 4x4 complex matrix via the
 *  Faddeev-LeVerrier recursion.  Returns {c0, c1, c2, c3} such that
 *  p(x) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0. */
std::array<cplx, 4> characteristic_polynomial(const Mat4& m);

/** All roots of a monic polynomial with the given low-order coefficients
 *  (x^n + c[n-1] x^{n-1} + ... + c[0]) by Durand-Kerner iteration. */
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs);

/** Eigenvalues of a 4x4 complex matrix by Hessenberg reduction and shifted
 *  QR iteration; backward stable, so degenerate pairs are resolved to
 *  machine precision.  Order is unspecified. */
std::array<cplx, 4> eigenvalues4(const Mat4& m);

/** Least-squares slope of log(y) against log(x); used to estimate empirical
 *  convergence orders.  Requires at least two points and positive data. */
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace wlat::numerics
