#include "wlat/paths.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wlat::paths {

namespace {

constexpr int kEnumerationCap = 10;
const cplx kI{0.0, 1.0};

void check_steps(const Path& p, Mode mode) {
    const int d = geometry::direction_count(mode);
    for (int s : p.steps)
        if (s < 1 || s > d)
            throw std::invalid_argument("path step direction out of range");
}

/** +1 for a counterclockwise planar bend (1->2->3->1), -1 for clockwise,
 *  0 for straight. */
int planar_turn(int from, int to) {
    if (from == to) return 0;
    const int diff = (to - from + 3) % 3;
    return (diff == 1) ? +1 : -1;
}

}  // namespace

std::vector<Path> enumerate_paths(int n_steps, Mode mode) {
    if (n_steps < 1) throw std::invalid_argument("enumerate_paths: need at least 1 step");
    if (n_steps > kEnumerationCap)
        throw std::invalid_argument("enumerate_paths: step count exceeds the cap of 10");
    const int d = geometry::direction_count(mode);

    std::vector<Path> out;
    out.reserve(static_cast<std::size_t>(std::pow(d, n_steps)));
    Path p;
    p.steps.assign(n_steps, 1);
    while (true) {
        out.push_back(p);
        int pos = n_steps - 1;
        while (pos >= 0 && p.steps[pos] == d) {
            p.steps[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++p.steps[pos];
    }
    return out;
}

std::vector<Path> paths_to_displacement(const evolution::Site& d, Mode mode) {
    const int dirs = geometry::direction_count(mode);
    int n = 0;
    for (int i = 0; i < 4; ++i) {
        if (d[i] < 0)
            throw std::invalid_argument("paths_to_displacement: counts must be >= 0");
        if (i >= dirs && d[i] != 0)
            throw std::invalid_argument(
                "paths_to_displacement: planar displacements use directions 1..3");
        n += d[i];
    }
    if (n < 1)
        throw std::invalid_argument("paths_to_displacement: need at least 1 step");
    if (n > kEnumerationCap)
        throw std::invalid_argument(
            "paths_to_displacement: step count exceeds the cap of 10");

    Path p;
    p.steps.reserve(n);
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < d[i]; ++c) p.steps.push_back(i + 1);

    std::vector<Path> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.steps.begin(), p.steps.end()));
    return out;
}

std::size_t path_count(const evolution::Site& d, Mode mode) {
    const int dirs = geometry::direction_count(mode);
    for (int i = 0; i < 4; ++i) {
        if (d[i] < 0) throw std::invalid_argument("path_count: counts must be >= 0");
        if (i >= dirs && d[i] != 0)
            throw std::invalid_argument("path_count: planar displacements use directions 1..3");
    }
    // Multinomial as a product of binomials C(partial sum, count).
    std::size_t result = 1;
    int total = 0;
    for (int i = 0; i < 4; ++i) {
        for (int c = 1; c <= d[i]; ++c) {
            ++total;
            result = result * total / c;  // C(total, c) built incrementally stays integral
        }
    }
    return result;
}

SpinMatrix amplitude_matrix(const Path& p, Chirality chirality, Mode mode) {
    check_steps(p, mode);
    if (p.length() < 1)
        throw std::invalid_argument("amplitude_matrix: empty path");
    const double w = (mode == Mode::FourD) ? 0.5 : 2.0 / 3.0;
    SpinMatrix m = SpinMatrix::identity();
    for (int s : p.steps) m = spin::step_projector(s, chirality, mode) * m;
    return std::pow(w, p.length()) * m;
}

PathStats path_stats(const Path& p) {
    PathStats st;
    st.n_steps = p.length();
    for (int s = 1; s < p.length(); ++s) {
        const int a = p.steps[s - 1], b = p.steps[s];
        if (a == b) continue;
        ++st.n_bends;
        if (a == 4 || b == 4) continue;
        // Handed cycle 1 -> 3 -> 2 -> 1 counts +1, its reverse -1.
        const bool forward = (a == 1 && b == 3) || (a == 3 && b == 2) || (a == 2 && b == 1);
        st.handed_excess += forward ? +1 : -1;
    }
    return st;
}

cplx bend_rule_amplitude(const PathStats& s, Chirality chirality) {
    const int t = (chirality == Chirality::Right) ? s.handed_excess : -s.handed_excess;
    static const cplx quarter_turns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx phase = quarter_turns[((t % 4) + 4) % 4];
    return phase * std::pow(3.0, -0.5 * s.n_bends) * std::pow(2.0, -s.n_steps);
}

cplx scalar_amplitude(const Path& p, int dir_in, int dir_out, spin::PhaseRule rule,
                      Chirality chirality) {
    check_steps(p, Mode::FourD);
    if (p.length() < 1) throw std::invalid_argument("scalar_amplitude: empty path");
    if (dir_in < 1 || dir_in > 4 || dir_out < 1 || dir_out > 4)
        throw std::invalid_argument("scalar_amplitude: cap direction out of range");

    cplx amp = spin::transition(dir_in, p.steps.front(), rule, chirality);
    for (int s = 1; s < p.length(); ++s)
        amp *= spin::transition(p.steps[s - 1], p.steps[s], rule, chirality);
    amp *= spin::transition(p.steps.back(), dir_out, rule, chirality);
    return amp * std::pow(2.0, -p.length());
}

Spinor planar_spinor(int i, PlanarVariant variant) {
    if (i < 1 || i > 3)
        throw std::invalid_argument("planar_spinor: direction must be in 1..3");
    const double phi = 2.0 * M_PI * (i - 1) / 3.0;
    const cplx q = std::exp(kI * phi);
    const double r = 1.0 / std::sqrt(2.0);
    switch (variant) {
        case PlanarVariant::ChiralPlus:
            return Spinor{r, r * q};
        case PlanarVariant::ChiralMinus:
            return Spinor{r * std::conj(q), r};
        case PlanarVariant::Symmetric:
        default:
            return Spinor{r * q, r * std::conj(q)};
    }
}

cplx planar_transition(int from, int to, PlanarVariant variant) {
    return inner(planar_spinor(to, variant), planar_spinor(from, variant));
}

cplx planar_bend_product(const Path& p, PlanarVariant variant, bool closed) {
    check_steps(p, Mode::Planar);
    if (p.length() < 1) throw std::invalid_argument("planar_bend_product: empty path");
    cplx prod{1.0, 0.0};
    for (int s = 1; s < p.length(); ++s)
        prod *= planar_transition(p.steps[s - 1], p.steps[s], variant);
    if (closed) prod *= planar_transition(p.steps.back(), p.steps.front(), variant);
    return prod;
}

int planar_turn_excess(const Path& p, bool closed) {
    check_steps(p, Mode::Planar);
    if (p.length() < 1) throw std::invalid_argument("planar_turn_excess: empty path");
    int excess = 0;
    for (int s = 1; s < p.length(); ++s)
        excess += planar_turn(p.steps[s - 1], p.steps[s]);
    if (closed) excess += planar_turn(p.steps.back(), p.steps.front());
    return excess;
}

int planar_winding(const Path& p) {
    check_steps(p, Mode::Planar);
    std::array<int, 3> counts{};
    for (int s : p.steps) ++counts[s - 1];
    if (counts[0] != counts[1] || counts[1] != counts[2])
        throw std::invalid_argument("planar_winding: path is not closed");
    const int excess = planar_turn_excess(p, /*closed=*/true);
    if (excess % 3 != 0)
        throw invariant_violation("winding-quantization",
                                  "closed-path turn excess not divisible by 3");
    return excess / 3;
}

}  // namespace wlat::paths
