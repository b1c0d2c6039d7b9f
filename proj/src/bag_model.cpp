#include "qdirac/bag_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qdirac/numerics.hpp"

namespace qdirac {

namespace {

const Matrix4c& beta_alpha3() {
    static const Matrix4c m = dirac_matrices().beta * dirac_matrices().alpha[2];
    return m;
}

constexpr double kEnergyFloor = 1e-9;

std::optional<double> invert_branch_momentum(double momentum, double mass, const PotentialStep& pot,
                                             Branch branch) {
    const double target = momentum * momentum;
    double lo = mass + kEnergyFloor;
    if (branch == Branch::Minus) {
        lo = std::max(lo, evanescent_width(mass, pot.v0, pot.w_abs).e_up);
    }
    auto f = [&](double e) { return kinematics(e, mass, pot).Q2(branch) - target; };
    if (f(lo) > 0.0) return std::nullopt;

    double hi = std::max(2.0 * lo, lo + momentum + std::abs(pot.v0) + pot.w_abs + 1.0);
    for (int grow = 0; f(hi) < 0.0; ++grow) {
        if (grow > 60) return std::nullopt;
        hi *= 2.0;
    }
    return bisect(f, lo, hi, 1e-15 * hi);
}

}  // namespace

double MassProfile::mass_at(double z) const {
    if (z > 0.0 && z < length) return m_inside;
    return m_outside.value_or(std::numeric_limits<double>::infinity());
}

QSpinor boundary_map(Wall wall, const QSpinor& psi) {
    const Complex factor = wall == Wall::Left ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
    return right_mul(apply_matrix(beta_alpha3(), psi), factor);
}

double boundary_residual(Wall wall, const QSpinor& psi) { return norm(psi - boundary_map(wall, psi)); }

BoundaryPhase boundary_phase(double amplitude, Branch branch) {
    const double a = branch == Branch::Minus ? amplitude : -amplitude;
    return {branch, 2.0 * std::atan2(1.0, a)};
}

double boundary_phase_tangent(double amplitude, Branch branch) {
    return branch_sign(branch) * -2.0 * amplitude / (amplitude * amplitude - 1.0);
}

std::vector<double> quantized_momenta(double length, int n_max) {
    if (!(length > 0.0)) throw std::invalid_argument("quantized_momenta: L must be positive");
    if (n_max < 1) throw std::invalid_argument("quantized_momenta: n_max must be at least 1");
    std::vector<double> q;
    q.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) q.push_back(n * std::numbers::pi / (2.0 * length));
    return q;
}

std::optional<double> energy_for_momentum(double momentum, double mass, const PotentialStep& pot,
                                          Branch branch) {
    if (pot.v0 == 0.0) {
        const double eff = momentum - branch_sign(branch) * pot.w_abs;
        return std::hypot(eff, mass);
    }
    return invert_branch_momentum(momentum, mass, pot, branch);
}

StationaryWavefunction::StationaryWavefunction(Branch branch, Spin spin, double momentum, double energy,
                                               double amplitude, Complex j_coefficient, double theta,
                                               double length, double norm_const)
    : branch_{branch},
      spin_{spin},
      momentum_{momentum},
      energy_{energy},
      amplitude_{amplitude},
      j_coefficient_{j_coefficient},
      theta_{theta},
      length_{length},
      norm_const_{norm_const} {}

StationaryWavefunction StationaryWavefunction::with_norm(double norm_const) const {
    StationaryWavefunction copy = *this;
    copy.norm_const_ = norm_const;
    return copy;
}

QSpinor StationaryWavefunction::operator()(double z) const {
    QSpinor psi;
    if (z < 0.0 || z > length_) return psi;

    const double a = momentum_ * z - 0.5 * theta_;
    const double b = momentum_ * z + 0.5 * theta_;
    const Complex iA{0.0, amplitude_};
    const Complex& jc = j_coefficient_;
    const double s3 = sigma3_sign(spin_);
    const std::size_t s = spin_slot(spin_);

    const Quaternion cos_block{Complex{std::cos(a), 0.0}, -jc * std::cos(b)};
    if (branch_ == Branch::Minus) {
        const Quaternion sin_block{Complex{std::sin(a), 0.0}, jc * std::sin(b)};
        psi[s] = norm_const_ * cos_block;
        psi[2 + s] = (norm_const_ * s3) * right_mul(sin_block, iA);
    } else {
        const Quaternion sin_block{Complex{std::sin(a), 0.0}, -jc * std::sin(b)};
        psi[s] = (norm_const_ * s3) * left_mul(iA, sin_block);
        psi[2 + s] = norm_const_ * cos_block;
    }
    return psi;
}

StationaryWavefunction trial_wavefunction(Branch branch, double momentum, double mass,
                                          const PotentialStep& pot, double length, Spin spin) {
    const auto energy = energy_for_momentum(momentum, mass, pot, branch);
    if (!energy) throw NoSolutionError("trial_wavefunction: no energy on this branch for the momentum");

    const double amplitude = branch_amplitude(*energy, mass, pot, branch).real();
    Complex jc{};
    if (pot.w_abs != 0.0) {
        const ModeCoefficients c = mode_coefficients(*energy, mass, pot, branch);
        const Complex W = branch == Branch::Minus ? pot.w0() : std::conj(pot.w0());
        jc = W * c.M;
    }
    const double theta = boundary_phase(amplitude, branch).theta;
    return {branch, spin, momentum, *energy, amplitude, jc, theta, length, 1.0};
}

std::vector<BagLevel> solve_spectrum(double mass, const PotentialStep& pot, double length, int n_max,
                                     Branch branch) {
    std::vector<BagLevel> levels;
    const auto momenta = quantized_momenta(length, n_max);
    for (std::size_t i = 0; i < momenta.size(); ++i) {
        BagLevel lv;
        lv.branch = branch;
        lv.n = static_cast<int>(i) + 1;
        lv.q_n = momenta[i];
        lv.eff_momentum = lv.q_n - branch_sign(branch) * pot.w_abs;
        lv.closed_form_energy = std::hypot(lv.eff_momentum, mass);
        lv.sign_regime_flag = branch == Branch::Plus && lv.q_n < pot.w_abs;

        const StationaryWavefunction trial = trial_wavefunction(branch, lv.q_n, mass, pot, length);
        lv.energy = trial.energy();
        lv.amplitude = trial.amplitude();
        lv.theta = trial.theta();
        lv.norm_const = normalize(trial).norm_const;
        levels.push_back(lv);
    }
    return levels;
}

StationaryWavefunction stationary_wavefunction(const BagLevel& level, double mass,
                                               const PotentialStep& pot, double length, Spin spin) {
    const StationaryWavefunction trial = trial_wavefunction(level.branch, level.q_n, mass, pot, length, spin);
    return trial.with_norm(level.norm_const);
}

double integrate_density(const StationaryWavefunction& psi, std::size_t* evaluations,
                         double* error_estimate) {
    std::size_t calls = 0;
    auto f = [&](double z) {
        ++calls;
        return psi.density(z);
    };
    double err = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, psi.length(), 15, 1e-14, &err);
    if (evaluations) *evaluations = calls;
    if (error_estimate) *error_estimate = err;
    return value;
}

Normalization normalize(const StationaryWavefunction& psi) {
    const StationaryWavefunction unit = psi.with_norm(1.0);
    std::size_t calls = 0;
    double err = 0.0;
    const double integral = integrate_density(unit, &calls, &err);
    if (!(integral > 0.0)) throw std::domain_error("normalize: wavefunction is identically zero");
    const double n = 1.0 / std::sqrt(integral);
    return {n, unit.with_norm(n), calls, err};
}

std::vector<DensitySample> density_profile(const StationaryWavefunction& psi, int grid_points) {
    if (grid_points < 2) throw std::invalid_argument("density_profile: need at least 2 grid points");
    std::vector<DensitySample> out;
    out.reserve(static_cast<std::size_t>(grid_points));
    const double L = psi.length();
    for (int i = 0; i < grid_points; ++i) {
        const double z = i == grid_points - 1 ? L : L * i / (grid_points - 1);
        const QSpinor v = psi(z);
        DensitySample d;
        d.z = z;
        for (const auto& q : v.comp) {
            d.rho_complex += std::norm(q.u);
            d.rho_quaternionic += std::norm(q.w);
        }
        d.rho = d.rho_complex + d.rho_quaternionic;
        out.push_back(d);
    }
    return out;
}

WallConditions right_wall_conditions(const StationaryWavefunction& psi) {
    const double L = psi.length();
    const QSpinor at_wall = psi(L);
    const QSpinor mismatch = at_wall - boundary_map(Wall::Right, at_wall);

    const std::size_t s = spin_slot(psi.spin());
    const std::size_t cos_slot = psi.branch() == Branch::Minus ? s : 2 + s;
    const Quaternion& d = mismatch[cos_slot];
    const double n = psi.norm_const();
    const Complex jc = psi.j_coefficient();

    WallConditions w;
    w.complex_part = d.u.real() / n;
    if (std::norm(jc) > 0.0) {
        w.quaternionic_part = -(std::conj(jc) * d.w).real() / (std::norm(jc) * n);
    } else {
        // No j-term: the quaternionic condition is vacuous; report its trigonometric form.
        const double b = psi.momentum() * L + 0.5 * psi.theta();
        w.quaternionic_part = std::cos(b) + branch_sign(psi.branch()) * -psi.amplitude() * std::sin(b);
    }
    return w;
}

double quantization_residual(const StationaryWavefunction& psi) {
    const WallConditions w = right_wall_conditions(psi);
    const double QL = psi.momentum() * psi.length();
    const double a = QL - 0.5 * psi.theta();
    const double b = QL + 0.5 * psi.theta();
    return w.complex_part * std::sin(b) + w.quaternionic_part * std::sin(a);
}

double wall_antisymmetry(double momentum, double length, double theta) {
    const double QL = momentum * length;
    return 1.0 / std::tan(QL - 0.5 * theta) + 1.0 / std::tan(QL + 0.5 * theta);
}

}  // namespace qdirac
