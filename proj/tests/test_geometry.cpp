#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wlat/geometry.hpp"
#include "wlat/numerics.hpp"

using namespace wlat;
using namespace wlat::geometry;

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt3 = 1.7320508075688772;
constexpr double kSqrt6 = 2.449489742783178;

}  // namespace

TEST_CASE("numerics: angle wrapping") {
    CHECK(numerics::wrap_angle(0.0) == doctest::Approx(0.0));
    CHECK(numerics::wrap_angle(3 * M_PI) == doctest::Approx(-M_PI));
    CHECK(numerics::wrap_angle(-M_PI) == doctest::Approx(-M_PI));
    CHECK(numerics::wrap_angle(M_PI) == doctest::Approx(-M_PI));  // [-pi, pi)
    CHECK(numerics::wrap_angle(2.5 * M_PI) == doctest::Approx(0.5 * M_PI));
}

TEST_CASE("numerics: dense linear solve against multiply-back") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4;
        std::vector<std::vector<double>> a(n, std::vector<double>(n));
        std::vector<double> x(n), b(n, 0.0);
        for (int i = 0; i < n; ++i) {
            x[i] = u(rng);
            for (int j = 0; j < n; ++j) a[i][j] = u(rng) + (i == j ? 3.0 : 0.0);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[i] += a[i][j] * x[j];
        const auto sol = numerics::solve(a, b);
        for (int i = 0; i < n; ++i) CHECK(sol[i] == doctest::Approx(x[i]).epsilon(1e-10));
    }
}

TEST_CASE("numerics: quartic eigenvalues from factored polynomials") {
    // Diagonal matrix: eigenvalues are the diagonal.
    numerics::Mat4 m{};
    const std::array<cplx, 4> diag{cplx(1.0, 0.5), cplx(-2.0, 0.0), cplx(0.0, -1.0),
                                   cplx(0.25, 0.25)};
    for (int i = 0; i < 4; ++i) m[i][i] = diag[i];
    m[0][1] = cplx(0.3, -0.2);  // triangular perturbation keeps the spectrum
    m[1][3] = cplx(-0.7, 0.1);
    auto ev = numerics::eigenvalues4(m);
    // Match each expected eigenvalue to the nearest computed one.
    for (const auto& want : diag) {
        double best = 1e9;
        for (const auto& got : ev) best = std::min(best, std::abs(got - want));
        CHECK(best < 1e-10);
    }
}

TEST_CASE("numerics: log-log slope recovers exact power laws") {
    std::vector<double> x{0.1, 0.05, 0.025, 0.0125};
    std::vector<double> y2, y1;
    for (double v : x) {
        y2.push_back(3.0 * v * v);
        y1.push_back(0.7 * v);
    }
    CHECK(numerics::log_log_slope(x, y2) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(numerics::log_log_slope(x, y1) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tetrad: exact components and defining identities") {
    const auto& n = tetrad(Mode::FourD);
    REQUIRE(n.size() == 4);
    CHECK(n[0].x == doctest::Approx(2 * kSqrt2 / 3).epsilon(1e-15));
    CHECK(n[0].y == doctest::Approx(0.0));
    CHECK(n[0].z == doctest::Approx(-1.0 / 3).epsilon(1e-15));
    CHECK(n[1].x == doctest::Approx(-kSqrt2 / 3).epsilon(1e-15));
    CHECK(n[1].y == doctest::Approx(kSqrt6 / 3).epsilon(1e-15));
    CHECK(n[2].y == doctest::Approx(-kSqrt6 / 3).epsilon(1e-15));
    CHECK(n[3].x == 0.0);
    CHECK(n[3].y == 0.0);
    CHECK(n[3].z == 1.0);

    for (int i = 0; i < 4; ++i) {
        CHECK(n[i].dot(n[i]) == doctest::Approx(1.0).epsilon(1e-15));
        for (int j = i + 1; j < 4; ++j)
            CHECK(n[i].dot(n[j]) == doctest::Approx(-1.0 / 3).epsilon(1e-14));
    }
    Vec3 sum{};
    for (const auto& v : n) sum = sum + v;
    CHECK(sum.norm() < 1e-15);

    // Second-moment isotropy sum_i n_i^a n_i^b = (4/3) delta^{ab}.
    const double comp[4][3] = {{n[0].x, n[0].y, n[0].z},
                               {n[1].x, n[1].y, n[1].z},
                               {n[2].x, n[2].y, n[2].z},
                               {n[3].x, n[3].y, n[3].z}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            double s = 0;
            for (int i = 0; i < 4; ++i) s += comp[i][a] * comp[i][b];
            CHECK(s == doctest::Approx(a == b ? 4.0 / 3 : 0.0).epsilon(1e-14));
        }

    CHECK(tetrad_residual(Mode::FourD) < 1e-14);
}

TEST_CASE("tetrad: planar variant") {
    const auto& n = tetrad(Mode::Planar);
    REQUIRE(n.size() == 3);
    CHECK(direction_count(Mode::Planar) == 3);
    CHECK(direction_count(Mode::FourD) == 4);
    CHECK(marginal_speed(Mode::FourD) == doctest::Approx(3.0));
    CHECK(marginal_speed(Mode::Planar) == doctest::Approx(2.0));

    CHECK(n[0].x == doctest::Approx(1.0));
    CHECK(n[1].x == doctest::Approx(-0.5));
    CHECK(n[1].y == doctest::Approx(kSqrt3 / 2).epsilon(1e-15));
    for (int i = 0; i < 3; ++i) {
        CHECK(n[i].z == 0.0);
        CHECK(n[i].dot(n[i]) == doctest::Approx(1.0).epsilon(1e-15));
        for (int j = i + 1; j < 3; ++j)
            CHECK(n[i].dot(n[j]) == doctest::Approx(-0.5).epsilon(1e-14));
    }
    CHECK(tetrad_residual(Mode::Planar) < 1e-14);
}

TEST_CASE("step vectors: spacelike at the marginal speed, norm^2 = 1 - alpha^2") {
    auto steps = step_vectors(3.0, Mode::FourD);
    REQUIRE(steps.size() == 4);
    for (const auto& s : steps) {
        CHECK(s.t == 1.0);
        // Individual steps are spacelike (1 - 9 = -8); only face normals are null.
        CHECK(s.minkowski_norm2() == doctest::Approx(-8.0).epsilon(1e-15));
    }
    // N_1 = (1, 2 sqrt 2, 0, -1) at alpha = 3.
    CHECK(steps[0].x == doctest::Approx(2 * kSqrt2).epsilon(1e-15));
    CHECK(steps[0].z == doctest::Approx(-1.0).epsilon(1e-15));

    for (double alpha : {1.0, 2.0, 2.5, 4.0}) {
        for (const auto& s : step_vectors(alpha, Mode::FourD))
            CHECK(s.minkowski_norm2() == doctest::Approx(1 - alpha * alpha).epsilon(1e-12));
    }
    CHECK_THROWS_AS(step_vectors(0.0, Mode::FourD), std::invalid_argument);
    CHECK_THROWS_AS(step_vectors(-1.0, Mode::Planar), std::invalid_argument);
}

TEST_CASE("face normal: null and orthogonal at alpha = 3") {
    const auto rep = face_null_normal({1, 2, 3}, 3.0);
    CHECK(rep.normal.t == doctest::Approx(3.0));
    CHECK(rep.normal.x == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rep.normal.y == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rep.normal.z == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(std::abs(rep.minkowski_norm2) < 1e-12);
    for (double d : rep.step_dots) CHECK(std::abs(d) < 1e-12);

    // Off the marginal speed the normal is timelike: norm^2 = 9 - alpha^2,
    // and k . N_i = 3 - alpha^2/3 for the face steps.
    for (double alpha : {1.0, 2.0}) {
        for (const std::array<int, 3> face :
             {std::array<int, 3>{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}) {
            const auto r = face_null_normal(face, alpha);
            CHECK(r.minkowski_norm2 == doctest::Approx(9 - alpha * alpha).epsilon(1e-12));
            for (double d : r.step_dots)
                CHECK(d == doctest::Approx(3 - alpha * alpha / 3).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(face_null_normal({1, 1, 2}, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(face_null_normal({0, 1, 2}, 3.0), std::invalid_argument);
}

TEST_CASE("lattice scales") {
    const auto s = lattice_scales(1.0 / 3, 3.0);
    CHECK(s.spacing == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.volume_per_point == doctest::Approx(16.0 / (3 * kSqrt3)).epsilon(1e-15));
    CHECK(fcc_volume_per_point(1.0) == doctest::Approx(3.0792014356780038).epsilon(1e-12));

    // Volume per point at spacing 3 eps equals 48 sqrt 3 eps^3: the same
    // number the wavevector Jacobian produces.
    const double eps = 0.37;
    const auto s2 = lattice_scales(eps, 3.0);
    CHECK(s2.volume_per_point ==
          doctest::Approx(48 * kSqrt3 * eps * eps * eps).epsilon(1e-12));

    CHECK_THROWS_AS(lattice_scales(0.0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(lattice_scales(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("embed: single steps and linearity") {
    const Displacement d{{1, 0, 0, 0}};
    const auto x = embed(d, 1.0, 3.0);
    CHECK(x.t == doctest::Approx(1.0));
    CHECK(x.x == doctest::Approx(2 * kSqrt2).epsilon(1e-14));
    CHECK(x.y == doctest::Approx(0.0));
    CHECK(x.z == doctest::Approx(-1.0).epsilon(1e-14));

    const Displacement d2{{1, 1, 1, 1}};
    const auto x2 = embed(d2, 0.5, 3.0);
    CHECK(x2.t == doctest::Approx(2.0));  // four steps of eps = 0.5
    CHECK(std::abs(x2.x) < 1e-14);        // directions cancel
    CHECK(std::abs(x2.y) < 1e-14);
    CHECK(std::abs(x2.z) < 1e-14);
}

TEST_CASE("invert: exact round trip on random integer counts") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(0, 100);
    for (int trial = 0; trial < 200; ++trial) {
        const Displacement d{{c(rng), c(rng), c(rng), c(rng)}};
        const double eps = 0.1 + 0.9 * std::uniform_real_distribution<double>(0, 1)(rng);
        const auto x = embed(d, eps, 3.0);
        const auto back = invert(x, eps, 3.0);
        CHECK(back.on_lattice);
        CHECK(back.residual < 1e-9);
        CHECK(back.displacement == d);
    }
}

TEST_CASE("invert: flags off-lattice points") {
    const Displacement d{{2, 1, 0, 3}};
    auto x = embed(d, 1.0, 3.0);
    x.x += 0.37;  // knock the point off the lattice
    const auto r = invert(x, 1.0, 3.0);
    CHECK_FALSE(r.on_lattice);
    CHECK(r.residual > 1e-3);
}

TEST_CASE("wavevector map: time covector and Jacobian") {
    const auto kj = wavevector_to_lattice({1.0, 0.0, 0.0, 0.0});
    for (double v : kj) CHECK(v == doctest::Approx(1.0));
    CHECK(wavevector_jacobian() == doctest::Approx(48 * kSqrt3).epsilon(1e-9));

    // Round trip: recover k_mu from the four per-direction components by
    // solving the 4x4 system with the generic dense solver as oracle.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const auto steps = step_vectors(3.0, Mode::FourD);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec4 k{u(rng), u(rng), u(rng), u(rng)};
        const auto comp = wavevector_to_lattice(k);
        std::vector<std::vector<double>> a(4, std::vector<double>(4));
        for (int j = 0; j < 4; ++j)
            a[j] = {steps[j].t, steps[j].x, steps[j].y, steps[j].z};
        const auto sol = numerics::solve(a, {comp[0], comp[1], comp[2], comp[3]});
        CHECK(sol[0] == doctest::Approx(k.t).epsilon(1e-12));
        CHECK(sol[1] == doctest::Approx(k.x).epsilon(1e-12));
        CHECK(sol[2] == doctest::Approx(k.y).epsilon(1e-12));
        CHECK(sol[3] == doctest::Approx(k.z).epsilon(1e-12));
    }
}
