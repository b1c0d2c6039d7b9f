#pragma once

/**
 * @file quaternion.hpp
 * @brief Quaternions in the symplectic (complex-pair) representation.
 *
 * A quaternion is stored as q = U + jW with U, W complex. With k = ij the
 * basis table is i² = j² = k² = -1, ij = k, jk = i, ki = j, and complex
 * scalars anticommute past j as j·z = z̄·j. The product of two pairs is
 *
 *   (U1 + jW1)(U2 + jW2) = (U1 U2 - W̄1 W2) + j (Ū1 W2 + W1 U2).
 *
 * Left multiplication by any quaternion is linear with respect to right
 * multiplication by complex scalars; right multiplication by j is not.
 */

#include <array>
#include <cmath>
#include <complex>

namespace qdirac {

using Complex = std::complex<double>;

struct Quaternion {
    Complex u{};  // complex part U
    Complex w{};  // pure quaternionic part W, q = U + jW

    constexpr Quaternion() = default;
    constexpr Quaternion(Complex u_, Complex w_) : u{u_}, w{w_} {}
    // NOLINTNEXTLINE(google-explicit-constructor)
    constexpr Quaternion(Complex z) : u{z}, w{} {}
    // NOLINTNEXTLINE(google-explicit-constructor)
    constexpr Quaternion(double x) : u{x, 0.0}, w{} {}

    static constexpr Quaternion one() { return {Complex{1.0, 0.0}, Complex{}}; }
    static constexpr Quaternion i() { return {Complex{0.0, 1.0}, Complex{}}; }
    static constexpr Quaternion j() { return {Complex{}, Complex{1.0, 0.0}}; }
    // k = ij = j·(-i)
    static constexpr Quaternion k() { return {Complex{}, Complex{0.0, -1.0}}; }

    bool operator==(const Quaternion&) const = default;

    Quaternion& operator+=(const Quaternion& o) {
        u += o.u;
        w += o.w;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        u -= o.u;
        w -= o.w;
        return *this;
    }
};

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator-(const Quaternion& a) { return {-a.u, -a.w}; }

/// Hamilton product in symplectic form.
inline Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {a.u * b.u - std::conj(a.w) * b.w, std::conj(a.u) * b.w + a.w * b.u};
}

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }

inline Quaternion operator*(double s, const Quaternion& q) { return {s * q.u, s * q.w}; }
inline Quaternion operator*(const Quaternion& q, double s) { return {q.u * s, q.w * s}; }

/// Right multiplication by a complex scalar: (U + jW)z = Uz + jWz.
inline Quaternion right_mul(const Quaternion& q, Complex z) { return {q.u * z, q.w * z}; }

/// Left multiplication by a complex scalar: z(U + jW) = zU + j z̄W.
inline Quaternion left_mul(Complex z, const Quaternion& q) { return {z * q.u, std::conj(z) * q.w}; }

/// Quaternion conjugate; negates the i, j and k parts.
inline Quaternion conj(const Quaternion& q) { return {std::conj(q.u), -q.w}; }

inline double norm2(const Quaternion& q) { return std::norm(q.u) + std::norm(q.w); }
inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// Returns z̄ as a quaternion, the scalar that satisfies j·z = z̄·j.
inline Quaternion commute_complex(Complex z) { return Quaternion{std::conj(z)}; }

/// Real coefficients (A, B, C, D) of q = A + Bi + Cj + Dk.
/// Since Cj + Dk = j(C - Di), U = A + Bi and W = C - Di.
inline std::array<double, 4> realify(const Quaternion& q) {
    return {q.u.real(), q.u.imag(), q.w.real(), -q.w.imag()};
}

inline Quaternion from_real(const std::array<double, 4>& c) {
    return {Complex{c[0], c[1]}, Complex{c[2], -c[3]}};
}

}  // namespace qdirac
