#pragma once

/**
 * @file dirac_algebra.hpp
 * @brief Dirac matrices, quaternionic 4-spinors and the stationary operator.
 *
 * Conventions used throughout the library:
 *  - matrix entries (complex) multiply spinor components on the LEFT;
 *  - plane-wave phases e^{i(Qz - Et)} multiply on the RIGHT;
 *  - the potential quaternion iV1 + jV2 + kV3 multiplies on the LEFT.
 *
 * For the one-dimensional problem along z only α₃ enters, and a plane wave
 * Ψ = ψ e^{i(dQz + sEt)} (d = ±1 direction, s = -1 usually) turns the
 * time-dependent equation into the stationary residual
 *
 *   L(ψ) = ψ(i s E) + α₃ ψ (i d Q) + i m β ψ + V ψ.
 */

#include <array>
#include <vector>

#include <Eigen/Core>

#include "qdirac/potential.hpp"
#include "qdirac/quaternion.hpp"

namespace qdirac {

using Matrix2c = Eigen::Matrix<Complex, 2, 2>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using RealOperator = Eigen::Matrix<double, 16, 16>;

struct DiracMatrices {
    std::array<Matrix4c, 3> alpha;
    Matrix4c beta;
    std::array<Matrix2c, 3> pauli;
    Matrix4c identity4;
};

/// Standard representation: α_m off-diagonal blocks σ_m, β = diag(1, 1, -1, -1).
DiracMatrices build_matrices();

/// Shared instance; build_matrices() is cheap but this avoids rebuilding in loops.
const DiracMatrices& dirac_matrices();

struct QSpinor {
    std::array<Quaternion, 4> comp{};

    Quaternion& operator[](std::size_t a) { return comp[a]; }
    const Quaternion& operator[](std::size_t a) const { return comp[a]; }

    QSpinor& operator+=(const QSpinor& o) {
        for (std::size_t a = 0; a < 4; ++a) comp[a] += o.comp[a];
        return *this;
    }
    QSpinor& operator-=(const QSpinor& o) {
        for (std::size_t a = 0; a < 4; ++a) comp[a] -= o.comp[a];
        return *this;
    }
    bool operator==(const QSpinor&) const = default;
};

inline QSpinor operator+(QSpinor a, const QSpinor& b) { return a += b; }
inline QSpinor operator-(QSpinor a, const QSpinor& b) { return a -= b; }

double norm2(const QSpinor& psi);
double norm(const QSpinor& psi);

/// Every component right-multiplied by z.
QSpinor right_mul(const QSpinor& psi, Complex z);
/// Every component left-multiplied by the quaternion q.
QSpinor left_mul(const Quaternion& q, const QSpinor& psi);

/// Matrix-vector product with matrix entries acting from the left.
QSpinor apply_matrix(const Matrix4c& m, const QSpinor& psi);

/// 16 real coordinates, component by component in (A, B, C, D) order.
Eigen::Matrix<double, 16, 1> to_real(const QSpinor& psi);
QSpinor from_real(const Eigen::Matrix<double, 16, 1>& v);

enum class TimeSign { Negative = -1, Positive = 1 };

/// Ψ(z, t) = spinor · exp(i(direction·Q·z + time_sign·E·t)).
struct PlaneWaveState {
    QSpinor spinor;
    Complex momentum{};
    double energy = 0.0;
    int direction = 1;
    TimeSign time_sign = TimeSign::Negative;

    QSpinor evaluate(double z, double t) const;
};

/// The stationary residual L(ψ) described in the file comment.
QSpinor stationary_residual(const QSpinor& psi, double energy, Complex momentum, double mass,
                            const PotentialStep& pot, int direction = 1,
                            TimeSign time_sign = TimeSign::Negative);

/// ‖∂tΨ + [α₃∂z + imβ + V]Ψ‖ / ‖Ψ‖ at (z, t), with analytic derivatives.
/// Throws std::domain_error for a zero spinor.
double dirac_residual(const PlaneWaveState& state, double mass, const PotentialStep& pot,
                      double z = 0.0, double t = 0.0);

/// L as a real-linear map on the 16 real coordinates of a spinor.
RealOperator realify_stationary_operator(double energy, Complex momentum, double mass,
                                         const PotentialStep& pot);

/// Orthonormal basis (in the 16 real coordinates) of the numerical nullspace
/// of the realified operator: right singular vectors with σ < tol·σ_max.
/// Empty when (E, Q) is not on a dispersion branch.
std::vector<QSpinor> nullspace_oracle(double energy, Complex momentum, double mass,
                                      const PotentialStep& pot, double tol = 1e-8);

/// Length of the projection of ψ/‖ψ‖ onto span(basis); basis must be real-orthonormal.
double projection_onto(const std::vector<QSpinor>& basis, const QSpinor& psi);

}  // namespace qdirac
