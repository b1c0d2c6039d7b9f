#include "qdirac/dirac_algebra.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace qdirac {

DiracMatrices build_matrices() {
    DiracMatrices d;
    const Complex I{0.0, 1.0};
    d.pauli[0] << 0.0, 1.0, 1.0, 0.0;
    d.pauli[1] << 0.0, -I, I, 0.0;
    d.pauli[2] << 1.0, 0.0, 0.0, -1.0;

    const Matrix2c zero = Matrix2c::Zero();
    const Matrix2c one = Matrix2c::Identity();
    for (std::size_t m = 0; m < 3; ++m) {
        d.alpha[m] << zero, d.pauli[m], d.pauli[m], zero;
    }
    d.beta << one, zero, zero, -one;
    d.identity4 = Matrix4c::Identity();
    return d;
}

const DiracMatrices& dirac_matrices() {
    static const DiracMatrices d = build_matrices();
    return d;
}

double norm2(const QSpinor& psi) {
    double s = 0.0;
    for (const auto& q : psi.comp) s += norm2(q);
    return s;
}

double norm(const QSpinor& psi) { return std::sqrt(norm2(psi)); }

QSpinor right_mul(const QSpinor& psi, Complex z) {
    QSpinor out;
    for (std::size_t a = 0; a < 4; ++a) out[a] = right_mul(psi[a], z);
    return out;
}

QSpinor left_mul(const Quaternion& q, const QSpinor& psi) {
    QSpinor out;
    for (std::size_t a = 0; a < 4; ++a) out[a] = q * psi[a];
    return out;
}

QSpinor apply_matrix(const Matrix4c& m, const QSpinor& psi) {
    QSpinor out;
    for (Eigen::Index a = 0; a < 4; ++a) {
        Quaternion acc;
        for (Eigen::Index b = 0; b < 4; ++b) {
            const Complex entry = m(a, b);
            if (entry != Complex{}) acc += left_mul(entry, psi[static_cast<std::size_t>(b)]);
        }
        out[static_cast<std::size_t>(a)] = acc;
    }
    return out;
}

Eigen::Matrix<double, 16, 1> to_real(const QSpinor& psi) {
    Eigen::Matrix<double, 16, 1> v;
    for (std::size_t a = 0; a < 4; ++a) {
        const auto c = realify(psi[a]);
        for (std::size_t r = 0; r < 4; ++r) v(static_cast<Eigen::Index>(4 * a + r)) = c[r];
    }
    return v;
}

QSpinor from_real(const Eigen::Matrix<double, 16, 1>& v) {
    QSpinor psi;
    for (std::size_t a = 0; a < 4; ++a) {
        std::array<double, 4> c{};
        for (std::size_t r = 0; r < 4; ++r) c[r] = v(static_cast<Eigen::Index>(4 * a + r));
        psi[a] = qdirac::from_real(c);
    }
    return psi;
}

QSpinor PlaneWaveState::evaluate(double z, double t) const {
    const Complex I{0.0, 1.0};
    const double s = static_cast<double>(time_sign);
    const Complex phase = std::exp(I * (static_cast<double>(direction) * momentum * z + s * energy * t));
    return right_mul(spinor, phase);
}

QSpinor stationary_residual(const QSpinor& psi, double energy, Complex momentum, double mass,
                            const PotentialStep& pot, int direction, TimeSign time_sign) {
    const auto& d = dirac_matrices();
    const Complex I{0.0, 1.0};
    const double s = static_cast<double>(time_sign);

    QSpinor out = right_mul(psi, I * s * energy);
    out += right_mul(apply_matrix(d.alpha[2], psi), I * static_cast<double>(direction) * momentum);
    out += left_mul(Quaternion{Complex{0.0, mass}}, apply_matrix(d.beta, psi));
    out += left_mul(pot.potential_quaternion(), psi);
    return out;
}

double dirac_residual(const PlaneWaveState& state, double mass, const PotentialStep& pot, double z,
                      double t) {
    const QSpinor psi = state.evaluate(z, t);
    const double n = norm(psi);
    if (n == 0.0) throw std::domain_error("dirac_residual: zero-norm spinor");
    // The phase factor is a right scalar and passes through every term of L.
    const QSpinor r = stationary_residual(psi, state.energy, state.momentum, mass, pot,
                                          state.direction, state.time_sign);
    return norm(r) / n;
}

RealOperator realify_stationary_operator(double energy, Complex momentum, double mass,
                                         const PotentialStep& pot) {
    RealOperator op;
    for (Eigen::Index b = 0; b < 16; ++b) {
        Eigen::Matrix<double, 16, 1> e = Eigen::Matrix<double, 16, 1>::Zero();
        e(b) = 1.0;
        op.col(b) = to_real(stationary_residual(from_real(e), energy, momentum, mass, pot));
    }
    return op;
}

std::vector<QSpinor> nullspace_oracle(double energy, Complex momentum, double mass,
                                      const PotentialStep& pot, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("nullspace_oracle: tol must be positive");
    const RealOperator op = realify_stationary_operator(energy, momentum, mass, pot);
    const Eigen::JacobiSVD<RealOperator> svd(op, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * sv(0);

    std::vector<QSpinor> basis;
    for (Eigen::Index c = 0; c < 16; ++c) {
        if (sv(c) < cutoff) basis.push_back(from_real(svd.matrixV().col(c)));
    }
    return basis;
}

double projection_onto(const std::vector<QSpinor>& basis, const QSpinor& psi) {
    const auto v = to_real(psi);
    const double n = v.norm();
    if (n == 0.0) throw std::domain_error("projection_onto: zero-norm spinor");
    double s = 0.0;
    for (const auto& b : basis) {
        const double c = to_real(b).dot(v) / n;
        s += c * c;
    }
    return std::sqrt(s);
}

}  // namespace qdirac
