#include "wlat/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "wlat/numerics.hpp"

namespace wlat::geometry {

double Vec3::norm() const { return std::sqrt(dot(*this)); }

int direction_count(Mode mode) { return mode == Mode::FourD ? 4 : 3; }

double marginal_speed(Mode mode) { return mode == Mode::FourD ? 3.0 : 2.0; }

const std::vector<Vec3>& tetrad(Mode mode) {
    static const std::vector<Vec3> four = {
        {2.0 * std::sqrt(2.0) / 3.0, 0.0, -1.0 / 3.0},
        {-std::sqrt(2.0) / 3.0, std::sqrt(6.0) / 3.0, -1.0 / 3.0},
        {-std::sqrt(2.0) / 3.0, -std::sqrt(6.0) / 3.0, -1.0 / 3.0},
        {0.0, 0.0, 1.0}};
    static const std::vector<Vec3> three = {
        {1.0, 0.0, 0.0},
        {-0.5, std::sqrt(3.0) / 2.0, 0.0},
        {-0.5, -std::sqrt(3.0) / 2.0, 0.0}};
    return mode == Mode::FourD ? four : three;
}

double tetrad_residual(Mode mode) {
    const auto& n = tetrad(mode);
    const int cnt = direction_count(mode);
    const double pair_dot = (mode == Mode::FourD) ? -1.0 / 3.0 : -0.5;
    const double moment = (mode == Mode::FourD) ? 4.0 / 3.0 : 1.5;

    double r = 0.0;
    Vec3 sum{};
    for (int i = 0; i < cnt; ++i) {
        r = std::max(r, std::abs(n[i].dot(n[i]) - 1.0));
        for (int j = i + 1; j < cnt; ++j)
            r = std::max(r, std::abs(n[i].dot(n[j]) - pair_dot));
        sum = sum + n[i];
    }
    r = std::max(r, sum.norm());

    // Second-moment isotropy on the subspace the directions span (all of
    // space in 4D; the xy-plane in planar mode, where the z row must vanish).
    const int dims = (mode == Mode::FourD) ? 3 : 2;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            double s = 0.0;
            for (int i = 0; i < cnt; ++i) {
                const double ca = (a == 0) ? n[i].x : (a == 1) ? n[i].y : n[i].z;
                const double cb = (b == 0) ? n[i].x : (b == 1) ? n[i].y : n[i].z;
                s += ca * cb;
            }
            const double want = (a == b && a < dims) ? moment : 0.0;
            r = std::max(r, std::abs(s - want));
        }
    }
    return r;
}

std::vector<Vec4> step_vectors(double alpha, Mode mode) {
    if (!(alpha > 0.0)) throw std::invalid_argument("step_vectors: alpha must be positive");
    const auto& n = tetrad(mode);
    std::vector<Vec4> steps;
    steps.reserve(n.size());
    for (const auto& d : n) steps.push_back({1.0, alpha * d.x, alpha * d.y, alpha * d.z});
    return steps;
}

FaceReport face_null_normal(const std::array<int, 3>& face, double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("face_null_normal: alpha must be positive");
    for (int i : face)
        if (i < 1 || i > 4)
            throw std::invalid_argument("face_null_normal: direction index out of 1..4");
    if (face[0] == face[1] || face[0] == face[2] || face[1] == face[2])
        throw std::invalid_argument("face_null_normal: direction indices must be distinct");

    const auto steps = step_vectors(alpha, Mode::FourD);
    FaceReport rep{};
    Vec4 k{};
    for (int i : face) k = k + steps[i - 1];
    rep.normal = k;
    rep.minkowski_norm2 = k.minkowski_norm2();
    for (int s = 0; s < 3; ++s) rep.step_dots[s] = k.minkowski_dot(steps[face[s] - 1]);
    return rep;
}

LatticeScales lattice_scales(double epsilon, double alpha) {
    if (!(epsilon > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("lattice_scales: epsilon and alpha must be positive");
    LatticeScales s{};
    s.epsilon = epsilon;
    s.alpha = alpha;
    s.spacing = alpha * epsilon;
    s.volume_per_point = fcc_volume_per_point(s.spacing);
    return s;
}

double fcc_volume_per_point(double spacing) {
    if (!(spacing > 0.0))
        throw std::invalid_argument("fcc_volume_per_point: spacing must be positive");
    return 16.0 / (3.0 * std::sqrt(3.0)) * spacing * spacing * spacing;
}

Vec4 embed(const Displacement& d, double epsilon, double alpha) {
    if (!(epsilon > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("embed: epsilon and alpha must be positive");
    const auto steps = step_vectors(alpha, Mode::FourD);
    Vec4 x{};
    for (int i = 0; i < 4; ++i) x = x + (epsilon * d.counts[i]) * steps[i];
    return x;
}

InvertResult invert(const Vec4& x, double epsilon, double alpha) {
    if (!(epsilon > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("invert: epsilon and alpha must be positive");
    const auto steps = step_vectors(alpha, Mode::FourD);
    // Columns of the system are the scaled step vectors: x = eps * sum c_i N_i.
    std::vector<std::vector<double>> a(4, std::vector<double>(4));
    for (int i = 0; i < 4; ++i) {
        a[0][i] = epsilon * steps[i].t;
        a[1][i] = epsilon * steps[i].x;
        a[2][i] = epsilon * steps[i].y;
        a[3][i] = epsilon * steps[i].z;
    }
    const auto c = numerics::solve(a, {x.t, x.x, x.y, x.z});

    InvertResult res{};
    for (int i = 0; i < 4; ++i) {
        const double rounded = std::round(c[i]);
        res.displacement.counts[i] = static_cast<int>(rounded);
        res.residual = std::max(res.residual, std::abs(c[i] - rounded));
    }
    res.on_lattice = res.residual <= 1e-9;
    return res;
}

std::array<double, 4> wavevector_to_lattice(const Vec4& k_cov, double alpha) {
    const auto steps = step_vectors(alpha, Mode::FourD);
    std::array<double, 4> out{};
    for (int j = 0; j < 4; ++j)
        out[j] = k_cov.t * steps[j].t + k_cov.x * steps[j].x + k_cov.y * steps[j].y +
                 k_cov.z * steps[j].z;
    return out;
}

double wavevector_jacobian(double alpha) {
    const auto steps = step_vectors(alpha, Mode::FourD);
    double m[4][4];
    for (int j = 0; j < 4; ++j) {
        m[j][0] = steps[j].t;
        m[j][1] = steps[j].x;
        m[j][2] = steps[j].y;
        m[j][3] = steps[j].z;
    }
    // Determinant by elimination with partial pivoting.
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            for (int c = 0; c < 4; ++c) std::swap(m[piv][c], m[col][c]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return std::abs(det);
}

}  // namespace wlat::geometry
