#pragma once

/**
 * @file bag_model.hpp
 * @brief Quaternionic Dirac particle confined to [0, L] by an infinite mass wall.
 *
 * Outside the well the wavefunction vanishes; at the walls the bag condition
 * ψ = βα₃ψi (z = 0) and ψ = -βα₃ψi (z = L) removes the probability current.
 * Inside, the two counter-propagating step solutions of one branch combine
 * into standing waves (spin up shown, a = Qz - θ/2, b = Qz + θ/2):
 *
 *   minus: 𝒩 [ cos a - jW0M cos b ;  (sin a + jW0M sin b) iA ]
 *   plus : 𝒩 [ iA (sin a - jW̄0M sin b) ;  cos a - jW̄0M cos b ]
 *
 * with cot(θ/2) = A (minus) or cot(θ/2) = -A (plus) from the z = 0 wall.
 * The z = L wall then asks for cot(QL - θ/2) = ±A and cot(QL + θ/2) = ∓A;
 * their antisymmetric combination reduces to sin(2QL) = 0, so Q_n = nπ/(2L)
 * and E_n² = (Q_n ∓ |W0|)² + m² for V0 = 0.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qdirac/dirac_algebra.hpp"
#include "qdirac/step_solution.hpp"

namespace qdirac {

/// Raised when no energy on the requested branch reproduces a quantized momentum.
class NoSolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Piecewise mass μ(z) = m inside (0, L), M outside; the bag limit is M = ∞.
struct MassProfile {
    double m_inside = 0.0;
    std::optional<double> m_outside;  // nullopt: M → ∞
    double length = 1.0;

    bool is_bag_limit() const { return !m_outside.has_value(); }
    double mass_at(double z) const;
};

enum class Wall { Left, Right };

/// ψ ↦ βα₃ψi at z = 0 and ψ ↦ -βα₃ψi at z = L. Each map is an involution.
QSpinor boundary_map(Wall wall, const QSpinor& psi);

/// ‖ψ - boundary_map(ψ)‖
double boundary_residual(Wall wall, const QSpinor& psi);

struct BoundaryPhase {
    Branch branch = Branch::Minus;
    double theta = 0.0;  // in (0, 2π)
};

/// θ = 2·arccot(A) (minus) or 2·arccot(-A) (plus), arccot into (0, π).
BoundaryPhase boundary_phase(double amplitude, Branch branch);

/// Right-hand side of the tangent identity, ±2A/(A² - 1) (+ for minus).
double boundary_phase_tangent(double amplitude, Branch branch);

/// Q_n = nπ/(2L) for n = 1..n_max.
std::vector<double> quantized_momenta(double length, int n_max);

/// Energy whose branch momentum equals Q. Closed form at V0 = 0
/// (E = sqrt((Q ∓ |W0|)² + m²)); otherwise bisection on [m + 1e-9, E_max]
/// in the diffusion zone. nullopt when no such energy exists.
std::optional<double> energy_for_momentum(double momentum, double mass, const PotentialStep& pot,
                                          Branch branch);

struct BagLevel {
    Branch branch = Branch::Minus;
    int n = 1;
    double q_n = 0.0;
    double eff_momentum = 0.0;  // Q_n ∓ |W0|
    double energy = 0.0;
    double closed_form_energy = 0.0;  // sqrt(𝒬² + m²); equals energy when V0 = 0
    double amplitude = 0.0;           // A at E_n
    double theta = 0.0;
    double norm_const = 0.0;
    bool sign_regime_flag = false;  // plus branch with Q_n < |W0|
};

class StationaryWavefunction {
public:
    StationaryWavefunction(Branch branch, Spin spin, double momentum, double energy, double amplitude,
                           Complex j_coefficient, double theta, double length, double norm_const);

    /// Zero outside [0, L].
    QSpinor operator()(double z) const;

    double density(double z) const { return norm2((*this)(z)); }

    Branch branch() const { return branch_; }
    Spin spin() const { return spin_; }
    double momentum() const { return momentum_; }
    double energy() const { return energy_; }
    double amplitude() const { return amplitude_; }
    /// W0·M (minus) or W̄0·M (plus): the factor multiplying j.
    Complex j_coefficient() const { return j_coefficient_; }
    double theta() const { return theta_; }
    double length() const { return length_; }
    double norm_const() const { return norm_const_; }

    StationaryWavefunction with_norm(double norm_const) const;

private:
    Branch branch_;
    Spin spin_;
    double momentum_;
    double energy_;
    double amplitude_;
    Complex j_coefficient_;
    double theta_;
    double length_;
    double norm_const_;
};

/// Levels n = 1..n_max. Throws NoSolutionError when a level has no energy.
std::vector<BagLevel> solve_spectrum(double mass, const PotentialStep& pot, double length, int n_max,
                                     Branch branch);

StationaryWavefunction stationary_wavefunction(const BagLevel& level, double mass,
                                               const PotentialStep& pot, double length,
                                               Spin spin = Spin::Up);

/// Unnormalized (𝒩 = 1) standing wave at an arbitrary momentum Q, with E,
/// A, M and θ evaluated at the energy that puts Q on the branch.
StationaryWavefunction trial_wavefunction(Branch branch, double momentum, double mass,
                                          const PotentialStep& pot, double length,
                                          Spin spin = Spin::Up);

struct Normalization {
    double norm_const = 0.0;
    StationaryWavefunction psi;
    std::size_t evaluations = 0;  // integrand calls
    double error_estimate = 0.0;
};

/// ∫₀ᴸ ‖ψ‖² dz by adaptive 61-point Gauss-Kronrod (tolerance 1e-14, depth 15).
double integrate_density(const StationaryWavefunction& psi, std::size_t* evaluations = nullptr,
                         double* error_estimate = nullptr);

/// Rescales ψ so that ∫₀ᴸ ‖ψ‖² dz = 1. Throws std::domain_error for ψ ≡ 0.
Normalization normalize(const StationaryWavefunction& psi);

struct DensitySample {
    double z = 0.0;
    double rho = 0.0;
    double rho_complex = 0.0;        // Σ|U|²
    double rho_quaternionic = 0.0;   // Σ|W|²
};

std::vector<DensitySample> density_profile(const StationaryWavefunction& psi, int grid_points);

/// The two z = L wall conditions read off the spinor mismatch, in pole-free
/// form: complex_part = sin(a)(cot a ∓ A), quaternionic_part = sin(b)(cot b ± A).
struct WallConditions {
    double complex_part = 0.0;
    double quaternionic_part = 0.0;
};

WallConditions right_wall_conditions(const StationaryWavefunction& psi);

/// Antisymmetric combination of the two wall conditions; equals sin(2QL).
double quantization_residual(const StationaryWavefunction& psi);

/// cot(QL - θ/2) + cot(QL + θ/2)
double wall_antisymmetry(double momentum, double length, double theta);

}  // namespace qdirac
