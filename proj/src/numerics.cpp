#include "wlat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wlat::numerics {

double wrap_angle(double theta) {
    double w = std::remainder(theta, 2.0 * M_PI);  // lands in [-pi, pi]
    if (w >= M_PI) w = -M_PI;
    return w;
}

std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve: matrix/vector size mismatch");
    double scale = 1.0;
    for (const auto& row : a) {
        if (row.size() != n) throw std::invalid_argument("solve: matrix is not square");
        for (double v : row) scale = std::max(scale, std::abs(v));
    }
    const double tiny = 1e-13 * scale;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < tiny)
            throw invariant_violation("singular-linear-system",
                                      "pivot below threshold in Gaussian elimination");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

namespace {

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

cplx mat_trace(const Mat4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

void add_diagonal(Mat4& a, cplx v) {
    for (int i = 0; i < 4; ++i) a[i][i] += v;
}

}  // namespace

std::array<cplx, 4> characteristic_polynomial(const Mat4& m) {
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(M_k)/k, M_{k+1} = A(M_k + c I).
    Mat4 mk = m;
    const cplx c3 = -mat_trace(mk);

    Mat4 t = mk;
    add_diagonal(t, c3);
    mk = mat_mul(m, t);
    const cplx c2 = -mat_trace(mk) / 2.0;

    t = mk;
    add_diagonal(t, c2);
    mk = mat_mul(m, t);
    const cplx c1 = -mat_trace(mk) / 3.0;

    t = mk;
    add_diagonal(t, c1);
    mk = mat_mul(m, t);
    const cplx c0 = -mat_trace(mk) / 4.0;

    return {c0, c1, c2, c3};
}

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
    const std::size_t n = coeffs.size();
    if (n == 0) return {};
    const auto eval = [&](cplx z) {
        cplx p = 1.0;
        for (std::size_t k = n; k-- > 0;) p = p * z + coeffs[k];
        return p;
    };
    // Durand-Kerner from the standard non-real, non-unit-modulus seed ring.
    std::vector<cplx> z(n);
    const cplx seed(0.4, 0.9);
    cplx p = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        p *= seed;
        z[k] = p;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double moved = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            cplx denom = 1.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) denom *= z[k] - z[j];
            if (denom == cplx(0.0)) {
                z[k] += cplx(1e-8, 1e-8);  // split coincident iterates
                moved = 1.0;
                continue;
            }
            const cplx dz = eval(z[k]) / denom;
            z[k] -= dz;
            moved = std::max(moved, std::abs(dz) / (1.0 + std::abs(z[k])));
        }
        if (moved < 1e-15) break;
    }
    return z;
}

namespace {

/** Unitary 2x2 [[c, s], [-conj(s), c]] with real c >= 0 mapping (a, b) to
 *  (r, 0). */
void givens(cplx a, cplx b, double& c, cplx& s) {
    const double bb = std::abs(b);
    if (bb == 0.0) {
        c = 1.0;
        s = 0.0;
        return;
    }
    const double aa = std::abs(a);
    if (aa == 0.0) {
        c = 0.0;
        s = 1.0;
        return;
    }
    const double r = std::hypot(aa, bb);
    c = aa / r;
    s = (a / aa) * std::conj(b) / r;
}

void rotate_rows(Mat4& h, int i, int j, double c, cplx s) {
    for (int col = 0; col < 4; ++col) {
        const cplx u = h[i][col], v = h[j][col];
        h[i][col] = c * u + s * v;
        h[j][col] = -std::conj(s) * u + c * v;
    }
}

void rotate_cols(Mat4& h, int i, int j, double c, cplx s) {
    for (int row = 0; row < 4; ++row) {
        const cplx u = h[row][i], v = h[row][j];
        h[row][i] = c * u + std::conj(s) * v;
        h[row][j] = -s * u + c * v;
    }
}

/** Eigenvalues of the 2x2 block [[a, b], [c, d]] by the quadratic formula. */
std::pair<cplx, cplx> eig2(cplx a, cplx b, cplx c, cplx d) {
    const cplx half = 0.5 * (a + d);
    const cplx sq = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
    return {half + sq, half - sq};
}

}  // namespace

std::array<cplx, 4> eigenvalues4(const Mat4& m) {
    // Hessenberg reduction by Givens similarity, then single-shift QR with
    // Wilkinson shifts.  Backward stable, so clustered (physically
    // degenerate) eigenvalues come out to machine precision, where a
    // characteristic-polynomial route would lose half the digits at every
    // double root.
    Mat4 h = m;
    double scale = 0.0;
    for (const auto& row : h)
        for (const cplx& v : row) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return {0.0, 0.0, 0.0, 0.0};

    const auto similarity = [&](int i, int j, double c, cplx s) {
        rotate_rows(h, i, j, c, s);
        rotate_cols(h, i, j, c, s);
    };
    double c;
    cplx s;
    givens(h[1][0], h[2][0], c, s);
    similarity(1, 2, c, s);
    givens(h[1][0], h[3][0], c, s);
    similarity(1, 3, c, s);
    givens(h[2][1], h[3][1], c, s);
    similarity(2, 3, c, s);

    std::array<cplx, 4> out{};
    int hi = 3;
    const double tol = 1e-16 * scale;
    for (int iter = 0; hi > 0; ++iter) {
        if (iter > 300)
            throw invariant_violation("qr-iteration-stalled",
                                      "eigenvalue iteration failed to deflate");
        // Deflate converged trailing entries.
        if (std::abs(h[hi][hi - 1]) <=
            tol + 1e-15 * (std::abs(h[hi][hi]) + std::abs(h[hi - 1][hi - 1]))) {
            out[hi] = h[hi][hi];
            --hi;
            continue;
        }
        if (hi == 1) {
            std::tie(out[0], out[1]) = eig2(h[0][0], h[0][1], h[1][0], h[1][1]);
            hi = -1;
            break;
        }
        // Wilkinson shift: the eigenvalue of the trailing 2x2 closer to the
        // corner entry.
        const auto [w0, w1] =
            eig2(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi]);
        cplx sigma = (std::abs(w0 - h[hi][hi]) < std::abs(w1 - h[hi][hi])) ? w0 : w1;
        if (iter % 40 == 39) sigma = h[hi][hi] + std::abs(h[hi][hi - 1]);  // exceptional

        for (int d = 0; d <= hi; ++d) h[d][d] -= sigma;
        std::array<double, 3> cs{};
        std::array<cplx, 3> ss{};
        for (int k = 0; k < hi; ++k) {
            givens(h[k][k], h[k + 1][k], cs[k], ss[k]);
            rotate_rows(h, k, k + 1, cs[k], ss[k]);
        }
        for (int k = 0; k < hi; ++k) rotate_cols(h, k, k + 1, cs[k], ss[k]);
        for (int d = 0; d <= hi; ++d) h[d][d] += sigma;
    }
    if (hi == 0) out[0] = h[0][0];
    return out;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("log_log_slope: need two or more matched points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("log_log_slope: data must be positive");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace wlat::numerics
