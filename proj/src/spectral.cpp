#include "wlat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wlat/numerics.hpp"
#include "wlat/spin.hpp"

namespace wlat::spectral {

namespace {

const cplx kI{0.0, 1.0};

std::array<SpinMatrix, 4> weights_for(double alpha) {
    std::array<SpinMatrix, 4> w;
    for (int i = 1; i <= 4; ++i) w[i - 1] = spin::step_weight(i, alpha, Mode::FourD);
    return w;
}

SpinMatrix amplification_with(const std::array<SpinMatrix, 4>& w,
                              const std::array<double, 4>& theta) {
    SpinMatrix a = SpinMatrix::zero();
    for (int j = 0; j < 4; ++j) a += std::exp(kI * theta[j]) * w[j];
    return 0.5 * a;
}

/** Unit eigenvector of m for eigenvalue lam, with a deterministic phase
 *  (largest component rotated to the positive real axis). */
Spinor eigenvector_for(const SpinMatrix& m, cplx lam) {
    // Rows of (m - lam) are orthogonal to the eigenvector; the two candidate
    // null vectors come from the two columns.
    const Spinor a{m.m01, lam - m.m00};
    const Spinor b{lam - m.m11, m.m10};
    Spinor v = (a.norm2() >= b.norm2()) ? a : b;
    if (v.norm2() < 1e-30) v = Spinor{1.0, 0.0};  // matrix is scalar
    const cplx big = (std::abs(v.c0) >= std::abs(v.c1)) ? v.c0 : v.c1;
    if (std::abs(big) > 0.0) v = (std::abs(big) / big) * v;
    return (1.0 / v.norm()) * v;
}

bool precedes(cplx a, cplx b) {
    // Keys are compared with a small tolerance: a conjugate pair has equal
    // moduli up to rounding, and exact comparison would make the branch
    // order depend on the last bit of the input phases.
    constexpr double tol = 1e-12;
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > tol) return ma > mb;
    if (std::abs(a.real() - b.real()) > tol) return a.real() > b.real();
    return a.imag() > b.imag();
}

}  // namespace

ThetaQuad ThetaQuad::sum_zero(double t1, double t2, double t3) {
    ThetaQuad q;
    q.theta[0] = numerics::wrap_angle(t1);
    q.theta[1] = numerics::wrap_angle(t2);
    q.theta[2] = numerics::wrap_angle(t3);
    q.theta[3] = numerics::wrap_angle(-(q.theta[0] + q.theta[1] + q.theta[2]));
    q.constrained = true;
    return q;
}

ThetaQuad ThetaQuad::free(const std::array<double, 4>& t) {
    ThetaQuad q;
    for (int j = 0; j < 4; ++j) q.theta[j] = numerics::wrap_angle(t[j]);
    q.constrained = false;
    return q;
}

double ThetaQuad::constraint_residual() const {
    if (!constrained) return 0.0;
    const double s = theta[0] + theta[1] + theta[2] + theta[3];
    return std::abs(std::remainder(s, 2.0 * M_PI));
}

SpinMatrix amplification(const ThetaQuad& q, double alpha) {
    return amplification_with(weights_for(alpha), q.theta);
}

EigenPair eigen_decompose(const SpinMatrix& m) {
    EigenPair out;
    const cplx tr = m.trace();
    const cplx disc = tr * tr - 4.0 * m.det();

    // Discriminants this small are numerically indistinguishable from a
    // repeated root, and taking the square root would amplify rounding noise
    // into O(1e-7) eigenvalue error; report the exact double root instead.
    if (std::abs(disc) < 1e-14) {
        out.degenerate = true;
        const cplx lam = 0.5 * tr;
        out.lambda = {lam, lam};
        const double off =
            std::abs(m.m01) + std::abs(m.m10) + std::abs(m.m00 - m.m11);
        if (off < 1e-13) {
            out.vec = {Spinor{1.0, 0.0}, Spinor{0.0, 1.0}};  // scalar matrix
        } else {
            const Spinor v = eigenvector_for(m, lam);  // defective: one direction
            out.vec = {v, v};
        }
        return out;
    }

    const cplx sq = std::sqrt(disc);
    cplx l0 = 0.5 * (tr + sq);
    cplx l1 = 0.5 * (tr - sq);
    if (!precedes(l0, l1)) std::swap(l0, l1);
    out.lambda = {l0, l1};
    out.vec = {eigenvector_for(m, l0), eigenvector_for(m, l1)};
    return out;
}

double phi_direct(const ThetaQuad& q) {
    const SpinMatrix a = amplification(q);
    const SpinMatrix g = a.adjoint() * a - SpinMatrix::identity();
    return g.det().real();
}

double phi_closed(const ThetaQuad& q) {
    const auto& t = q.theta;
    const auto f = [&](int i, int j) { return 1.0 - std::cos(t[i] - t[j]); };
    return (f(0, 1) * f(2, 3) + f(0, 2) * f(1, 3) + f(0, 3) * f(1, 2)) / 18.0;
}

double trace_gram(const ThetaQuad& q) {
    const auto& t = q.theta;
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) s += std::cos(t[i] - t[j]);
    return 1.0 + s / 6.0;
}

namespace {

/** Uniform grid values -pi + 2 pi j / M, with the `exclude` values nearest 0
 *  removed (ties broken toward the negative side, so odd counts drop a
 *  symmetric window). */
std::vector<double> axis_values(int grid, int exclude) {
    std::vector<double> axis(grid);
    for (int j = 0; j < grid; ++j) axis[j] = -M_PI + 2.0 * M_PI * j / grid;
    if (exclude <= 0) return axis;
    if (exclude >= grid) return {};
    std::vector<int> order(grid);
    for (int j = 0; j < grid; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        // -v and +v differ by an ulp after the grid arithmetic; compare
        // distances with a tolerance so mirrored pairs count as ties and
        // odd windows stay symmetric around zero.
        const double da = std::abs(axis[a]), db = std::abs(axis[b]);
        if (std::abs(da - db) > 1e-12) return da < db;
        return axis[a] < axis[b];
    });
    std::vector<bool> drop(grid, false);
    for (int r = 0; r < exclude; ++r) drop[order[r]] = true;
    std::vector<double> kept;
    kept.reserve(grid - exclude);
    for (int j = 0; j < grid; ++j)
        if (!drop[j]) kept.push_back(axis[j]);
    return kept;
}

void validate_scan(const ScanConfig& cfg) {
    if (cfg.grid < 2) throw std::invalid_argument("spectrum_scan: grid must be at least 2");
    if (!(cfg.alpha > 0.0))
        throw std::invalid_argument("spectrum_scan: alpha must be positive");
    const double points = cfg.constrained ? std::pow(cfg.grid, 3) : std::pow(cfg.grid, 4);
    if (points > 1e8)
        throw std::invalid_argument("spectrum_scan: grid exceeds the 1e8-point guard");
}

}  // namespace

std::vector<ScanRow> spectrum_scan(const ScanConfig& cfg) {
    validate_scan(cfg);
    const auto w = weights_for(cfg.alpha);
    const auto t1_axis = axis_values(cfg.grid, cfg.exclude_center);
    const auto axis = axis_values(cfg.grid, 0);

    std::vector<ScanRow> rows;
    const std::size_t per_point = 2;
    if (cfg.constrained) {
        rows.reserve(per_point * t1_axis.size() * axis.size() * axis.size());
        for (double t1 : t1_axis)
            for (double t2 : axis)
                for (double t3 : axis) {
                    const auto q = ThetaQuad::sum_zero(t1, t2, t3);
                    const auto eig = eigen_decompose(amplification_with(w, q.theta));
                    rows.push_back({q.theta, eig.lambda[0], 0});
                    rows.push_back({q.theta, eig.lambda[1], 1});
                }
    } else {
        rows.reserve(per_point * t1_axis.size() * axis.size() * axis.size() * axis.size());
        for (double t1 : t1_axis)
            for (double t2 : axis)
                for (double t3 : axis)
                    for (double t4 : axis) {
                        const auto q = ThetaQuad::free({t1, t2, t3, t4});
                        const auto eig = eigen_decompose(amplification_with(w, q.theta));
                        rows.push_back({q.theta, eig.lambda[0], 0});
                        rows.push_back({q.theta, eig.lambda[1], 1});
                    }
    }
    return rows;
}

namespace {

/** Largest real eigenvalue strictly inside the unit circle at the phase quad,
 *  or -infinity when none qualifies.  On the paired family used by the gap
 *  refinement the trace and determinant are exactly real, so eigenvalues are
 *  real precisely when the discriminant is non-negative. */
double best_real_eigenvalue(const SpinMatrix& a) {
    const auto eig = eigen_decompose(a);
    double best = -std::numeric_limits<double>::infinity();
    for (const cplx lam : eig.lambda) {
        if (std::abs(lam.imag()) >= 1e-9) continue;
        if (std::abs(lam) >= 1.0 - 1e-9) continue;
        best = std::max(best, lam.real());
    }
    return best;
}

}  // namespace

RealAxisGap real_axis_gap(int grid, double alpha) {
    if (grid < 40)
        throw std::invalid_argument("real_axis_gap: grid must be at least 40");
    if (!(alpha > 0.0))
        throw std::invalid_argument("real_axis_gap: alpha must be positive");
    const auto w = weights_for(alpha);
    const auto axis = axis_values(grid, 0);

    RealAxisGap out{};
    out.grid_value = -std::numeric_limits<double>::infinity();
    for (double t1 : axis)
        for (double t2 : axis)
            for (double t3 : axis) {
                const auto q = ThetaQuad::sum_zero(t1, t2, t3);
                const double v = best_real_eigenvalue(amplification_with(w, q.theta));
                if (v > out.grid_value) {
                    out.grid_value = v;
                    out.argmax = q.theta;
                }
            }

    // Refinement: move along the two-parameter family theta = (u,-u,w,-w)
    // (in the index pairing found at the argmax), which keeps the trace and
    // determinant of A real and therefore preserves real eigenvalues exactly.
    std::array<int, 4> partner{-1, -1, -1, -1};
    {
        const auto& t = out.argmax;
        std::array<bool, 4> used{};
        for (int i = 0; i < 4; ++i) {
            if (used[i]) continue;
            int best_j = -1;
            double best_d = 1e9;
            for (int j = i + 1; j < 4; ++j) {
                if (used[j]) continue;
                const double d = std::abs(std::remainder(t[i] + t[j], 2.0 * M_PI));
                if (d < best_d) {
                    best_d = d;
                    best_j = j;
                }
            }
            used[i] = used[best_j] = true;
            partner[i] = best_j;
            partner[best_j] = i;
        }
    }
    int i0 = 0, j0 = partner[0];
    int i1 = -1, j1 = -1;
    for (int j = 1; j < 4; ++j)
        if (j != j0) {
            i1 = j;
            j1 = partner[j];
            break;
        }

    const auto family_value = [&](double u, double ww) {
        std::array<double, 4> t{};
        t[i0] = u;
        t[j0] = -u;
        t[i1] = ww;
        t[j1] = -ww;
        return best_real_eigenvalue(amplification_with(w, t));
    };

    double u = out.argmax[i0], v = out.argmax[i1];
    double f = family_value(u, v);
    double step = 2.0 * M_PI / grid;
    while (step > 1e-12) {
        bool improved = false;
        const double cand_u[4] = {u + step, u - step, u, u};
        const double cand_v[4] = {v, v, v + step, v - step};
        for (int c = 0; c < 4; ++c) {
            const double fc = family_value(cand_u[c], cand_v[c]);
            if (fc > f) {
                f = fc;
                u = cand_u[c];
                v = cand_v[c];
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }

    out.refined_value = f;
    out.refined_theta[i0] = numerics::wrap_angle(u);
    out.refined_theta[j0] = numerics::wrap_angle(-u);
    out.refined_theta[i1] = numerics::wrap_angle(v);
    out.refined_theta[j1] = numerics::wrap_angle(-v);
    return out;
}

DispersionResult dispersion(const geometry::Vec3& k_cov, double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("dispersion: epsilon must be positive");
    const auto& n = geometry::tetrad(Mode::FourD);
    DispersionResult out{};
    for (int j = 0; j < 4; ++j)
        out.theta[j] = 3.0 * epsilon * k_cov.dot(n[j]);

    int coincident_max = 1;
    for (int i = 0; i < 4; ++i) {
        int group = 1;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            if (std::abs(std::remainder(out.theta[i] - out.theta[j], 2.0 * M_PI)) < 1e-9)
                ++group;
        }
        coincident_max = std::max(coincident_max, group);
    }
    out.three_coincident = coincident_max >= 3;

    const auto eig = eigen_decompose(amplification(ThetaQuad::free(out.theta)));
    for (int b = 0; b < 2; ++b) {
        DispersionBranch br{};
        br.lambda = eig.lambda[b];
        const double mod = std::abs(br.lambda);
        // A vanishing eigenvalue (cos 2 theta_1 = 0 on the coincident family)
        // only ever reaches ~1e-16 in floating point; anything below 1e-14 is
        // a numerical zero and the frequency has no finite value.
        if (mod < 1e-14) {
            br.infinite_decay = true;
            br.omega = cplx(0.0, -std::numeric_limits<double>::infinity());
        } else {
            double im = std::log(mod);  // per-step decay exponent
            if (im > 0.0) {
                if (im > 1e-12)
                    throw invariant_violation(
                        "unit-disk-violation",
                        "eigenvalue modulus above 1 at the marginal speed");
                im = 0.0;  // truncate rounding noise; the bound is exact
            }
            br.omega = cplx(-std::arg(br.lambda) / epsilon, im / epsilon);
            br.real_frequency = std::abs(mod - 1.0) < 1e-10;
        }
        out.branch[b] = br;
    }
    return out;
}

NormBoundReport norm_bound_probe(double alpha, int grid) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("norm_bound_probe: alpha must be positive");
    if (grid < 20)
        throw std::invalid_argument("norm_bound_probe: grid must be at least 20");
    const auto w = weights_for(alpha);
    const auto axis = axis_values(grid, 0);

    NormBoundReport out{};
    out.alpha = alpha;
    out.grid = grid;
    for (double t1 : axis)
        for (double t2 : axis)
            for (double t3 : axis) {
                const auto q = ThetaQuad::sum_zero(t1, t2, t3);
                const auto eig = eigen_decompose(amplification_with(w, q.theta));
                const double m =
                    std::max(std::abs(eig.lambda[0]), std::abs(eig.lambda[1]));
                if (m > out.max_abs_lambda) {
                    out.max_abs_lambda = m;
                    out.argmax = q.theta;
                }
            }
    out.exceeds_bound = out.max_abs_lambda > 1.0 + 1e-9;
    return out;
}

}  // namespace wlat::spectral
