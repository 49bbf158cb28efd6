#include "wlat/evolution.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "wlat/spectral.hpp"
#include "wlat/spin.hpp"

namespace wlat::evolution {

namespace {

const cplx kI{0.0, 1.0};

Site shift(const Site& s, int dir, int delta) {
    Site out = s;
    out[dir - 1] += delta;
    return out;
}

/** Output key set of one step: every occupied site fans out along the four
 *  directions. */
std::set<Site> fanout_keys(const SliceField& f) {
    std::set<Site> keys;
    for (const auto& [site, psi] : f.values) {
        (void)psi;
        for (int i = 1; i <= 4; ++i) keys.insert(shift(site, i, +1));
    }
    return keys;
}

std::array<SpinMatrix, 4> step_matrices(Chirality chirality) {
    std::array<SpinMatrix, 4> q;
    for (int i = 1; i <= 4; ++i)
        q[i - 1] = spin::step_projector(i, chirality, Mode::FourD);
    return q;
}

}  // namespace

SliceField delta_source(const Spinor& psi, Chirality chirality) {
    SliceField f;
    f.time = 0;
    f.chirality = chirality;
    f.values[{0, 0, 0, 0}] = psi;
    return f;
}

SliceField step_weyl(const SliceField& f) {
    const auto q = step_matrices(f.chirality);
    SliceField out;
    out.time = f.time + 1;
    out.chirality = f.chirality;
    for (const Site& x : fanout_keys(f)) {
        Spinor acc{};
        for (int i = 1; i <= 4; ++i) {
            const auto it = f.values.find(shift(x, i, -1));
            if (it != f.values.end()) acc += q[i - 1] * it->second;
        }
        out.values[x] = 0.5 * acc;
    }
    return out;
}

double norm2(const SliceField& f) {
    double s = 0.0;
    for (const auto& [site, psi] : f.values) {
        (void)site;
        s += psi.norm2();
    }
    return s;
}

cplx overlap(const SliceField& f, const SliceField& g) {
    cplx s{};
    for (const auto& [site, psi] : f.values) {
        const auto it = g.values.find(site);
        if (it != g.values.end()) s += inner(psi, it->second);
    }
    return s;
}

DiracField dirac_delta_source(const Spinor& r, const Spinor& l, double mass,
                              double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("dirac_delta_source: epsilon must be positive");
    DiracField f;
    f.right = delta_source(r, Chirality::Right);
    f.left = delta_source(l, Chirality::Left);
    f.mass = mass;
    f.epsilon = epsilon;
    return f;
}

DiracField step_dirac(const DiracField& f) {
    const auto p = step_matrices(Chirality::Right);
    const auto pbar = step_matrices(Chirality::Left);
    const cplx em = kI * f.epsilon * f.mass;

    std::set<Site> keys = fanout_keys(f.right);
    keys.merge(fanout_keys(f.left));

    DiracField out;
    out.mass = f.mass;
    out.epsilon = f.epsilon;
    out.right.time = out.left.time = f.right.time + 1;
    out.right.chirality = Chirality::Right;
    out.left.chirality = Chirality::Left;

    for (const Site& x : keys) {
        Spinor r{}, l{};
        for (int i = 1; i <= 4; ++i) {
            const Site src = shift(x, i, -1);
            const auto rit = f.right.values.find(src);
            const auto lit = f.left.values.find(src);
            const Spinor rv = (rit != f.right.values.end()) ? rit->second : Spinor{};
            const Spinor lv = (lit != f.left.values.end()) ? lit->second : Spinor{};
            r += p[i - 1] * (rv + em * lv);
            l += pbar[i - 1] * (lv + em * rv);
        }
        out.right.values[x] = 0.5 * r;
        out.left.values[x] = 0.5 * l;
    }
    return out;
}

double norm2(const DiracField& f) { return norm2(f.right) + norm2(f.left); }

MajoranaField majorana_delta_source(const Spinor& psi, double mass, double epsilon,
                                    MajoranaOrder order) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("majorana_delta_source: epsilon must be positive");
    MajoranaField f;
    f.field = delta_source(psi, Chirality::Right);
    f.mass = mass;
    f.epsilon = epsilon;
    f.order = order;
    return f;
}

MajoranaField step_majorana(const MajoranaField& f) {
    const auto q = step_matrices(f.field.chirality);
    const cplx em = kI * f.epsilon * f.mass;

    MajoranaField out;
    out.mass = f.mass;
    out.epsilon = f.epsilon;
    out.order = f.order;
    out.field.time = f.field.time + 1;
    out.field.chirality = f.field.chirality;

    for (const Site& x : fanout_keys(f.field)) {
        Spinor acc{};
        for (int i = 1; i <= 4; ++i) {
            const auto it = f.field.values.find(shift(x, i, -1));
            if (it == f.field.values.end()) continue;
            const Spinor& v = it->second;
            if (f.order == MajoranaOrder::ConjugateFirst) {
                acc += q[i - 1] * (v + em * spin::charge_conjugate(v));
            } else {
                const Spinor w = q[i - 1] * v;
                acc += w + em * spin::charge_conjugate(w);
            }
        }
        out.field.values[x] = 0.5 * acc;
    }
    return out;
}

namespace {

int wrap_count(int c, int period) {
    const int r = c % period;
    return (r < 0) ? r + period : r;
}

std::size_t torus_index(const TorusField& f, int c0, int c1, int c2, int c3) {
    const int L = f.period;
    const std::size_t i0 = wrap_count(c0, L), i1 = wrap_count(c1, L);
    const std::size_t i2 = wrap_count(c2, L), i3 = wrap_count(c3, L);
    return ((i0 * L + i1) * L + i2) * L + i3;
}

std::array<double, 4> phases_of(const geometry::Vec3& k_cov, double epsilon) {
    const auto& n = geometry::tetrad(Mode::FourD);
    std::array<double, 4> theta{};
    for (int j = 0; j < 4; ++j) theta[j] = 3.0 * epsilon * k_cov.dot(n[j]);
    return theta;
}

}  // namespace

Spinor& TorusField::at(int c0, int c1, int c2, int c3) {
    return data[torus_index(*this, c0, c1, c2, c3)];
}

const Spinor& TorusField::at(int c0, int c1, int c2, int c3) const {
    return data[torus_index(*this, c0, c1, c2, c3)];
}

TorusField plane_wave(const geometry::Vec3& k_cov, double epsilon, int period,
                      const Spinor& psi0) {
    if (period < 1) throw std::invalid_argument("plane_wave: period must be >= 1");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("plane_wave: epsilon must be positive");
    const double sites = std::pow(static_cast<double>(period), 4);
    if (sites > 1e7)
        throw std::invalid_argument("plane_wave: period^4 exceeds the 1e7-site guard");

    const auto theta = phases_of(k_cov, epsilon);
    const double unit = 2.0 * M_PI / period;
    for (int j = 0; j < 4; ++j) {
        const double nearest = unit * std::round(theta[j] / unit);
        if (std::abs(theta[j] - nearest) > 1e-9)
            throw std::invalid_argument(
                "plane_wave: wavevector incommensurate with the torus period");
    }

    TorusField f;
    f.period = period;
    f.data.resize(static_cast<std::size_t>(sites));
    for (int c0 = 0; c0 < period; ++c0)
        for (int c1 = 0; c1 < period; ++c1)
            for (int c2 = 0; c2 < period; ++c2)
                for (int c3 = 0; c3 < period; ++c3) {
                    const double phase =
                        theta[0] * c0 + theta[1] * c1 + theta[2] * c2 + theta[3] * c3;
                    f.at(c0, c1, c2, c3) = std::exp(-kI * phase) * psi0;
                }
    return f;
}

TorusField step_weyl_torus(const TorusField& f) {
    const auto q = step_matrices(f.chirality);
    TorusField out;
    out.period = f.period;
    out.chirality = f.chirality;
    out.data.resize(f.data.size());
    const int L = f.period;
    for (int c0 = 0; c0 < L; ++c0)
        for (int c1 = 0; c1 < L; ++c1)
            for (int c2 = 0; c2 < L; ++c2)
                for (int c3 = 0; c3 < L; ++c3) {
                    Spinor acc{};
                    acc += q[0] * f.at(c0 - 1, c1, c2, c3);
                    acc += q[1] * f.at(c0, c1 - 1, c2, c3);
                    acc += q[2] * f.at(c0, c1, c2 - 1, c3);
                    acc += q[3] * f.at(c0, c1, c2, c3 - 1);
                    out.at(c0, c1, c2, c3) = 0.5 * acc;
                }
    return out;
}

double norm2(const TorusField& f) {
    double s = 0.0;
    for (const auto& psi : f.data) s += psi.norm2();
    return s;
}

cplx plane_wave_multiplier(const geometry::Vec3& k_cov, double epsilon, int steps,
                           int period, int branch) {
    if (steps < 1)
        throw std::invalid_argument("plane_wave_multiplier: steps must be >= 1");
    if (branch != 0 && branch != 1)
        throw std::invalid_argument("plane_wave_multiplier: branch must be 0 or 1");

    const auto theta = phases_of(k_cov, epsilon);
    const auto eig =
        spectral::eigen_decompose(spectral::amplification(spectral::ThetaQuad::free(theta)));
    // At a degenerate point (k = 0: A is the identity) both branch slots
    // carry valid eigenvectors and the shared eigenvalue is measured.
    TorusField f = plane_wave(k_cov, epsilon, period, eig.vec[branch]);
    for (int s = 1; s < steps; ++s) f = step_weyl_torus(f);
    const TorusField prev = f;
    f = step_weyl_torus(f);

    // Projection of the stepped wave onto the previous slice: for an exact
    // eigenmode this is the eigenvalue, independently of normalization.
    cplx num{}, den{};
    for (std::size_t j = 0; j < f.data.size(); ++j) {
        num += inner(prev.data[j], f.data[j]);
        den += inner(prev.data[j], prev.data[j]);
    }
    return num / den;
}

numerics::Mat4 dirac_transfer(const geometry::Vec3& k_cov, double epsilon, double mass) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("dirac_transfer: epsilon must be positive");

    const auto theta = phases_of(k_cov, epsilon);
    const auto p = step_matrices(Chirality::Right);
    const auto pbar = step_matrices(Chirality::Left);
    const cplx em = kI * epsilon * mass;

    numerics::Mat4 t{};
    for (int b = 0; b < 4; ++b) {
        // Basis plane waves: (R, L) = (e_b, 0) for b < 2, (0, e_{b-2}) else.
        Spinor r0{}, l0{};
        if (b == 0) r0 = Spinor{1.0, 0.0};
        if (b == 1) r0 = Spinor{0.0, 1.0};
        if (b == 2) l0 = Spinor{1.0, 0.0};
        if (b == 3) l0 = Spinor{0.0, 1.0};

        // Measure one coupled step at the patch site (1,1,1,1); the input at
        // (1,1,1,1) - e_i carries the extra carrier factor exp(+i theta_i)
        // relative to the measurement site, whose own carrier is stripped.
        Spinor r{}, l{};
        for (int i = 0; i < 4; ++i) {
            const cplx carrier = std::exp(kI * theta[i]);
            const Spinor rv = carrier * r0;
            const Spinor lv = carrier * l0;
            r += p[i] * (rv + em * lv);
            l += pbar[i] * (lv + em * rv);
        }
        r = 0.5 * r;
        l = 0.5 * l;
        t[0][b] = r.c0;
        t[1][b] = r.c1;
        t[2][b] = l.c0;
        t[3][b] = l.c1;
    }
    return t;
}

geometry::Vec3 commensurate_wavevector(const std::array<int, 3>& m, int period,
                                       double epsilon) {
    if (period < 1)
        throw std::invalid_argument("commensurate_wavevector: period must be >= 1");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("commensurate_wavevector: epsilon must be positive");
    const auto& n = geometry::tetrad(Mode::FourD);
    std::vector<std::vector<double>> a(3, std::vector<double>(3));
    std::vector<double> b(3);
    for (int j = 0; j < 3; ++j) {
        a[j][0] = 3.0 * epsilon * n[j].x;
        a[j][1] = 3.0 * epsilon * n[j].y;
        a[j][2] = 3.0 * epsilon * n[j].z;
        b[j] = 2.0 * M_PI * m[j] / period;
    }
    const auto k = numerics::solve(a, b);
    return {k[0], k[1], k[2]};
}

}  // namespace wlat::evolution
