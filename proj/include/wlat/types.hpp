#pragma once

/**
 * Shared value types for the lattice spinor calculus: two-component complex
 * spinors, the 2x2 complex matrices that act on them, and the enumerations
 * that select chirality and the spatial dimension of the lattice.
 *
 * All numerics are IEEE double; matrices are small enough that every
 * operation is written out in closed form.
 */

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace wlat {

using cplx = std::complex<double>;

/** Right-handed fields propagate with the spin projectors P_i, left-handed
 *  ones with the orthogonal complements. */
enum class Chirality { Right, Left };

/** FourD is the 3+1-dimensional lattice with four step directions; Planar is
 *  the 2+1-dimensional variant with three coplanar step directions. */
enum class Mode { FourD, Planar };

/** Thrown when an internal consistency check fails.  Carries a stable
 *  identifier so callers (notably the CLI) can report which invariant broke
 *  before exiting with a dedicated status code. */
class invariant_violation : public std::runtime_error {
public:
    invariant_violation(std::string id, const std::string& detail)
        : std::runtime_error(id + ": " + detail), id_(std::move(id)) {}

    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

/** Two-component complex spinor (column vector). */
struct Spinor {
    cplx c0{};
    cplx c1{};

    Spinor() = default;
    Spinor(cplx a, cplx b) : c0(a), c1(b) {}

    Spinor operator+(const Spinor& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Spinor operator-(const Spinor& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Spinor operator-() const { return {-c0, -c1}; }
    Spinor& operator+=(const Spinor& o) {
        c0 += o.c0;
        c1 += o.c1;
        return *this;
    }

    double norm2() const { return std::norm(c0) + std::norm(c1); }
    double norm() const { return std::sqrt(norm2()); }
};

inline Spinor operator*(cplx s, const Spinor& v) { return {s * v.c0, s * v.c1}; }
inline Spinor operator*(double s, const Spinor& v) { return {s * v.c0, s * v.c1}; }

/** Hermitian inner product <a|b>, conjugating the first argument. */
inline cplx inner(const Spinor& a, const Spinor& b) {
    return std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
}

inline double max_abs_diff(const Spinor& a, const Spinor& b) {
    return std::max(std::abs(a.c0 - b.c0), std::abs(a.c1 - b.c1));
}

/** 2x2 complex matrix, row-major entries [[m00, m01], [m10, m11]]. */
struct SpinMatrix {
    cplx m00{}, m01{}, m10{}, m11{};

    SpinMatrix() = default;
    SpinMatrix(cplx a, cplx b, cplx c, cplx d) : m00(a), m01(b), m10(c), m11(d) {}

    static SpinMatrix identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static SpinMatrix zero() { return {}; }

    SpinMatrix operator+(const SpinMatrix& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    SpinMatrix operator-(const SpinMatrix& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }
    SpinMatrix operator-() const { return {-m00, -m01, -m10, -m11}; }
    SpinMatrix& operator+=(const SpinMatrix& o) {
        m00 += o.m00;
        m01 += o.m01;
        m10 += o.m10;
        m11 += o.m11;
        return *this;
    }

    SpinMatrix operator*(const SpinMatrix& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    Spinor operator*(const Spinor& v) const {
        return {m00 * v.c0 + m01 * v.c1, m10 * v.c0 + m11 * v.c1};
    }

    SpinMatrix adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }
    cplx trace() const { return m00 + m11; }
    cplx det() const { return m00 * m11 - m01 * m10; }

    /** Squared Frobenius norm (sum of squared entry moduli). */
    double frobenius2() const {
        return std::norm(m00) + std::norm(m01) + std::norm(m10) + std::norm(m11);
    }

    /** Operator norm: the largest singular value. */
    double op_norm() const {
        // Eigenvalues of the 2x2 Hermitian Gram matrix in closed form.
        const SpinMatrix g = adjoint() * (*this);
        const double tr = g.trace().real();
        const double dt = g.det().real();
        const double disc = std::max(tr * tr - 4.0 * dt, 0.0);
        return std::sqrt(0.5 * (tr + std::sqrt(disc)));
    }
};

inline SpinMatrix operator*(cplx s, const SpinMatrix& m) {
    return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
}
inline SpinMatrix operator*(double s, const SpinMatrix& m) {
    return {s * m.m00, s * m.m01, s * m.m10, s * m.m11};
}

inline double max_abs_diff(const SpinMatrix& a, const SpinMatrix& b) {
    return std::max(std::max(std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01)),
                    std::max(std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)));
}

/** Outer product |a><b| (second argument enters conjugated). */
inline SpinMatrix outer(const Spinor& a, const Spinor& b) {
    return {a.c0 * std::conj(b.c0), a.c0 * std::conj(b.c1),
            a.c1 * std::conj(b.c0), a.c1 * std::conj(b.c1)};
}

}  // namespace wlat
