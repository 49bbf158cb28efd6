#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "wlat/evolution.hpp"
#include "wlat/spectral.hpp"
#include "wlat/spin.hpp"

using namespace wlat;
using namespace wlat::evolution;

namespace {

const cplx kI{0.0, 1.0};

Site site_for(int i) {
    Site s{};
    s[i - 1] = 1;
    return s;
}

Site add(const Site& a, const Site& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Spinor random_spinor(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
}

}  // namespace

TEST_CASE("massless step: delta source fans out with projector weights") {
    const Spinor psi{cplx(0.6, 0.1), cplx(-0.3, 0.7)};
    const auto f0 = delta_source(psi);
    CHECK(f0.time == 0);
    CHECK(norm2(f0) == doctest::Approx(psi.norm2()));

    const auto f1 = step_weyl(f0);
    CHECK(f1.time == 1);
    REQUIRE(f1.values.size() == 4);
    for (int i = 1; i <= 4; ++i) {
        const auto it = f1.values.find(site_for(i));
        REQUIRE(it != f1.values.end());
        const auto want = 0.5 * (spin::projector(i) * psi);
        CHECK(max_abs_diff(it->second, want) < 1e-15);
        int total = 0;
        for (int c : it->first) {
            CHECK(c >= 0);
            total += c;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("massless step: unit delta source halves its squared norm") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto psi = random_spinor(rng);
        const double n = psi.norm();
        psi = (1.0 / n) * psi;
        auto f = delta_source(psi);
        CHECK(std::abs(norm2(f) - 1.0) < 1e-14);
        f = step_weyl(f);
        CHECK(std::abs(norm2(f) - 0.5) < 1e-14);
        // Further steps keep contracting (never expand).
        double prev = norm2(f);
        for (int t = 0; t < 4; ++t) {
            f = step_weyl(f);
            const double cur = norm2(f);
            CHECK(cur <= prev + 1e-14);
            prev = cur;
        }
    }
}

TEST_CASE("left-handed step uses the complementary projectors") {
    const Spinor psi{1.0, 0.0};
    auto f = delta_source(psi, Chirality::Left);
    f = step_weyl(f);
    for (int i = 1; i <= 4; ++i) {
        const auto want = 0.5 * (spin::anti_projector(i) * psi);
        CHECK(max_abs_diff(f.values.at(site_for(i)), want) < 1e-15);
    }
}

TEST_CASE("evolved neighboring orthogonal sources overlap") {
    // Unit sources on the two time-1 sites e1 and e2, orthogonal spinors.
    const Spinor psi{1.0, 0.0}, phi{0.0, 1.0};
    SliceField f, g;
    f.time = g.time = 1;
    f.values[site_for(1)] = psi;
    g.values[site_for(2)] = phi;

    const auto f1 = step_weyl(f), g1 = step_weyl(g);
    const cplx ov = overlap(f1, g1);
    // Only the common site e1 + e2 contributes: <P2 psi, P1 phi>/4.
    const cplx want =
        0.25 * inner(spin::projector(2) * psi, spin::projector(1) * phi);
    CHECK(std::abs(ov - want) < 1e-14);
    CHECK(std::abs(ov) > 0.01);
}

TEST_CASE("dirac step at zero mass decouples into two massless runs") {
    std::mt19937_64 rng(11);
    const auto r0 = random_spinor(rng), l0 = random_spinor(rng);
    auto d = dirac_delta_source(r0, l0, 0.0, 0.7);
    auto r = delta_source(r0, Chirality::Right);
    auto l = delta_source(l0, Chirality::Left);
    for (int t = 0; t < 3; ++t) {
        d = step_dirac(d);
        r = step_weyl(r);
        l = step_weyl(l);
    }
    REQUIRE(d.right.values.size() == r.values.size());
    for (const auto& [k, v] : r.values)
        CHECK(max_abs_diff(d.right.values.at(k), v) < 1e-15);
    for (const auto& [k, v] : l.values)
        CHECK(max_abs_diff(d.left.values.at(k), v) < 1e-15);
}

TEST_CASE("dirac step: single-step mass insertion and same-direction exclusion") {
    const double m = 0.3, eps = 0.5;
    const Spinor psi = spin::eigenspinor(1, spin::PhaseRule::B);
    auto d = dirac_delta_source(psi, Spinor{}, m, eps);
    d = step_dirac(d);

    for (int i = 1; i <= 4; ++i) {
        const auto wantR = 0.5 * (spin::projector(i) * psi);
        CHECK(max_abs_diff(d.right.values.at(site_for(i)), wantR) < 1e-15);
        const auto wantL = 0.5 * ((kI * eps * m) * (spin::anti_projector(i) * psi));
        const auto itL = d.left.values.find(site_for(i));
        if (i == 1) {
            // The flip in the source's own direction vanishes: Pbar_1 P_1 = 0.
            const double mag =
                (itL == d.left.values.end()) ? 0.0 : itL->second.norm();
            CHECK(mag < 1e-15);
        } else {
            REQUIRE(itL != d.left.values.end());
            CHECK(max_abs_diff(itL->second, wantL) < 1e-15);
        }
    }
}

TEST_CASE("dirac three-step expansion equals chirality-history path enumeration") {
    const double eps = 0.4;
    std::mt19937_64 rng(17);
    const auto r0 = random_spinor(rng), l0 = random_spinor(rng);

    for (double m : {0.0, 0.25, 1.0}) {
        auto d = dirac_delta_source(r0, l0, m, eps);
        for (int t = 0; t < 3; ++t) d = step_dirac(d);

        // Brute force: all direction triples, all chirality histories.
        std::map<Site, Spinor> accR, accL;
        for (int i1 = 1; i1 <= 4; ++i1)
            for (int i2 = 1; i2 <= 4; ++i2)
                for (int i3 = 1; i3 <= 4; ++i3)
                    for (int hist = 0; hist < 16; ++hist) {
                        const Chirality x0 = (hist & 1) ? Chirality::Left : Chirality::Right;
                        const Chirality x1 = (hist & 2) ? Chirality::Left : Chirality::Right;
                        const Chirality x2 = (hist & 4) ? Chirality::Left : Chirality::Right;
                        const Chirality x3 = (hist & 8) ? Chirality::Left : Chirality::Right;
                        const int flips = (x0 != x1) + (x1 != x2) + (x2 != x3);
                        // Integer power by hand: std::pow(0 + 0i, 0) is NaN.
                        cplx weight{0.125, 0.0};
                        for (int f = 0; f < flips; ++f) weight *= kI * eps * m;
                        Spinor v = (x0 == Chirality::Right) ? r0 : l0;
                        v = spin::step_projector(i1, x1) * v;
                        v = spin::step_projector(i2, x2) * v;
                        v = spin::step_projector(i3, x3) * v;
                        const Site s = add(add(site_for(i1), site_for(i2)), site_for(i3));
                        auto& bucket = (x3 == Chirality::Right) ? accR : accL;
                        bucket[s] += weight * v;
                    }

        for (const auto& [k, v] : accR) {
            const auto it = d.right.values.find(k);
            const Spinor got = (it == d.right.values.end()) ? Spinor{} : it->second;
            CHECK(max_abs_diff(got, v) < 1e-13);
        }
        for (const auto& [k, v] : accL) {
            const auto it = d.left.values.find(k);
            const Spinor got = (it == d.left.values.end()) ? Spinor{} : it->second;
            CHECK(max_abs_diff(got, v) < 1e-13);
        }
        CHECK(d.right.values.size() <= accR.size());
    }
}

TEST_CASE("dirac: negating the mass is conjugate to negating the left component") {
    std::mt19937_64 rng(19);
    const auto r0 = random_spinor(rng), l0 = random_spinor(rng);
    const double m = 0.45, eps = 0.3;

    auto plus = dirac_delta_source(r0, l0, m, eps);
    auto minus = dirac_delta_source(r0, (-1.0) * l0, -m, eps);
    for (int t = 0; t < 2; ++t) {
        plus = step_dirac(plus);
        minus = step_dirac(minus);
    }
    for (const auto& [k, v] : plus.right.values)
        CHECK(max_abs_diff(minus.right.values.at(k), v) < 1e-14);
    for (const auto& [k, v] : plus.left.values)
        CHECK(max_abs_diff(minus.left.values.at(k), (-1.0) * v) < 1e-14);
}

TEST_CASE("majorana step: zero mass reduces to the massless rule") {
    std::mt19937_64 rng(23);
    const auto psi = random_spinor(rng);
    auto mj = majorana_delta_source(psi, 0.0, 0.5);
    auto w = delta_source(psi);
    for (int t = 0; t < 3; ++t) {
        mj = step_majorana(mj);
        w = step_weyl(w);
    }
    REQUIRE(mj.field.values.size() == w.values.size());
    for (const auto& [k, v] : w.values)
        CHECK(max_abs_diff(mj.field.values.at(k), v) < 1e-15);
}

TEST_CASE("majorana step: insertion order variants and two-step expansion") {
    const double m = 0.35, eps = 0.6;
    std::mt19937_64 rng(29);
    const auto psi = random_spinor(rng);

    // ConjugateFirst, one step: 1/2 P_i (psi + i eps m C psi).
    auto cf = majorana_delta_source(psi, m, eps, MajoranaOrder::ConjugateFirst);
    cf = step_majorana(cf);
    const Spinor mixed = psi + (kI * eps * m) * spin::charge_conjugate(psi);
    for (int i = 1; i <= 4; ++i)
        CHECK(max_abs_diff(cf.field.values.at(site_for(i)),
                           0.5 * (spin::projector(i) * mixed)) < 1e-15);

    // PropagateFirst, one step: 1/2 (1 + i eps m C) P_i psi.
    auto pf = majorana_delta_source(psi, m, eps, MajoranaOrder::PropagateFirst);
    pf = step_majorana(pf);
    double difference = 0.0;
    for (int i = 1; i <= 4; ++i) {
        const Spinor pi = spin::projector(i) * psi;
        const Spinor want = 0.5 * (pi + (kI * eps * m) * spin::charge_conjugate(pi));
        CHECK(max_abs_diff(pf.field.values.at(site_for(i)), want) < 1e-15);
        difference = std::max(
            difference, max_abs_diff(pf.field.values.at(site_for(i)),
                                     cf.field.values.at(site_for(i))));
    }
    CHECK(difference > 1e-4);  // the variants genuinely differ at order eps^2 m^2 ... with C

    // Two ConjugateFirst steps against the explicit insertion expansion.
    auto cf2 = step_majorana(step_majorana(
        majorana_delta_source(psi, m, eps, MajoranaOrder::ConjugateFirst)));
    std::map<Site, Spinor> acc;
    for (int i1 = 1; i1 <= 4; ++i1)
        for (int i2 = 1; i2 <= 4; ++i2)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2) {
                    Spinor v = psi;
                    if (b1) v = (kI * eps * m) * spin::charge_conjugate(v);
                    v = spin::projector(i1) * v;
                    if (b2) v = (kI * eps * m) * spin::charge_conjugate(v);
                    v = spin::projector(i2) * v;
                    acc[add(site_for(i1), site_for(i2))] += 0.25 * v;
                }
    for (const auto& [k, v] : acc)
        CHECK(max_abs_diff(cf2.field.values.at(k), v) < 1e-14);
}

TEST_CASE("majorana step: real-linear but not complex-linear") {
    std::mt19937_64 rng(31);
    const auto psi = random_spinor(rng);
    const double m = 0.4, eps = 0.5;

    auto base = step_majorana(majorana_delta_source(psi, m, eps));
    auto scaled = step_majorana(majorana_delta_source(2.5 * psi, m, eps));
    double real_dev = 0.0, imag_dev = 0.0;
    for (const auto& [k, v] : base.field.values)
        real_dev = std::max(real_dev,
                            max_abs_diff(scaled.field.values.at(k), 2.5 * v));
    CHECK(real_dev < 1e-14);

    auto rotated = step_majorana(majorana_delta_source(kI * psi, m, eps));
    for (const auto& [k, v] : base.field.values)
        imag_dev = std::max(imag_dev,
                            max_abs_diff(rotated.field.values.at(k), kI * v));
    CHECK(imag_dev > 1e-3);
}

TEST_CASE("two-conjugation identity: commuting C through projector strings") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> len(0, 4), dir(1, 4);
    const double em = 0.7;  // eps * m lumped

    for (int trial = 0; trial < 200; ++trial) {
        const auto make_string = [&](std::vector<int>& dirs) {
            const int n = len(rng);
            dirs.clear();
            for (int s = 0; s < n; ++s) dirs.push_back(dir(rng));
        };
        std::vector<int> a, b, d;
        make_string(a);
        make_string(b);
        make_string(d);
        const auto psi = random_spinor(rng);

        // Operational left side: D, then i em C, then B, then i em C, then A.
        Spinor v = psi;
        for (int i : d) v = spin::projector(i) * v;
        v = (kI * em) * spin::charge_conjugate(v);
        for (int i : b) v = spin::projector(i) * v;
        v = (kI * em) * spin::charge_conjugate(v);
        for (int i : a) v = spin::projector(i) * v;

        // Closed form: both C's commuted out, flipping the middle string.
        Spinor w = psi;
        for (int i : d) w = spin::projector(i) * w;
        for (int i : b) w = spin::anti_projector(i) * w;
        for (int i : a) w = spin::projector(i) * w;
        w = (-em * em) * w;

        CHECK(max_abs_diff(v, w) < 1e-12);
    }
}

TEST_CASE("torus plane waves: commensurability, stationarity, multiplier") {
    const int period = 8;
    const double eps = 0.25;

    // Constant field (k = 0) is stationary under the massless step.
    const Spinor psi{cplx(0.3, 0.4), cplx(-0.5, 0.2)};
    auto constant = plane_wave({0, 0, 0}, eps, period, psi);
    const auto stepped = step_weyl_torus(constant);
    for (int c = 0; c < period * period * period * period; ++c)
        CHECK(max_abs_diff(stepped.data[c], constant.data[c]) < 1e-14);

    // Incommensurate wavevectors are rejected.
    CHECK_THROWS_AS(plane_wave({0.3, 0.0, 0.0}, eps, period, psi),
                    std::invalid_argument);

    // Commensurate wave: measured multiplier equals the spectral eigenvalue.
    const auto k = commensurate_wavevector({1, 0, 0}, period, eps);
    const auto theta = spectral::ThetaQuad::free(
        {2 * M_PI / period, 0.0, 0.0, -2 * M_PI / period});
    const auto eig = spectral::eigen_decompose(spectral::amplification(theta));
    for (int branch = 0; branch < 2; ++branch) {
        const cplx mult = plane_wave_multiplier(k, eps, 5, period, branch);
        CHECK(std::abs(mult - eig.lambda[branch]) < 1e-10);
    }
    CHECK(std::abs(plane_wave_multiplier({0, 0, 0}, eps, 3, period) - 1.0) < 1e-12);
}

TEST_CASE("dirac transfer matrix: block structure against the closed form") {
    const double eps = 0.2, m = 0.5;
    const geometry::Vec3 k{0.2, 0.0, 0.1};
    const auto t = dirac_transfer(k, eps, m);

    // Closed form blocks from the amplification matrices of each chirality.
    const auto& n = geometry::tetrad(Mode::FourD);
    SpinMatrix ar = SpinMatrix::zero(), al = SpinMatrix::zero();
    for (int i = 1; i <= 4; ++i) {
        const double th = 3.0 * eps * k.dot(n[i - 1]);
        ar += std::exp(kI * th) * spin::projector(i);
        al += std::exp(kI * th) * spin::anti_projector(i);
    }
    ar = 0.5 * ar;
    al = 0.5 * al;

    const auto block = [&](int r, int c) {
        return SpinMatrix{t[2 * r][2 * c], t[2 * r][2 * c + 1],
                          t[2 * r + 1][2 * c], t[2 * r + 1][2 * c + 1]};
    };
    CHECK(max_abs_diff(block(0, 0), ar) < 1e-12);
    CHECK(max_abs_diff(block(0, 1), (kI * eps * m) * ar) < 1e-12);
    CHECK(max_abs_diff(block(1, 0), (kI * eps * m) * al) < 1e-12);
    CHECK(max_abs_diff(block(1, 1), al) < 1e-12);
}

TEST_CASE("dirac transfer eigenvalues: massive dispersion as epsilon shrinks") {
    const double m = 0.5;
    const geometry::Vec3 k{0.2, 0.0, 0.1};
    const double target = std::sqrt(k.dot(k) + m * m);

    std::vector<double> epses, devs;
    for (int h = 0; h < 4; ++h) {
        const double eps = 0.1 / (1 << h);
        const auto t = dirac_transfer(k, eps, m);
        const auto mu = numerics::eigenvalues4(t);
        // The spectrum is two doubly-degenerate branches carrying
        // +-sqrt(k^2+m^2); every eigenvalue must land on one of them.
        double dev = 0.0;
        bool pos = false, neg = false;
        for (const cplx& e : mu) {
            const double w = -std::arg(e) / eps;
            dev = std::max(dev, std::abs(std::abs(w) - target));
            (w > 0 ? pos : neg) = true;
        }
        CHECK(pos);
        CHECK(neg);
        epses.push_back(eps);
        devs.push_back(dev);
        if (h > 0) CHECK(devs[h] < devs[h - 1]);
    }
    CHECK(numerics::log_log_slope(epses, devs) >= 1.5);
}
