#pragma once

/**
 * @file step_solution.hpp
 * @brief Closed-form plane-wave solutions for a quaternionic potential step.
 *
 * For energy E ≥ m on the potential side the two momentum branches obey
 *
 *   Q±² = q±² + |W0|² ± 2δ,  q±² = (E ± V0)² - m²,
 *   δ = sqrt(E²V0² + p²|W0|²) - E V0,  p² = E² - m².
 *
 * The minus branch has diffusion, evanescent and Klein zones; the evanescent
 * window is (E_low, E_up) with
 *
 *   E_up  = sqrt(|W0|² + (m + V0)²),
 *   E_low = max(m, sqrt(|W0|² + (m - V0)²)).
 *
 * The plus branch is diffusive for all E ≥ m when V0 ≥ 0.
 */

#include <optional>
#include <string_view>

#include "qdirac/dirac_algebra.hpp"
#include "qdirac/potential.hpp"

namespace qdirac {

enum class Branch { Plus, Minus };
enum class Spin { Up, Down };
enum class Zone { Diffusion, Evanescent, Klein };

std::string_view to_string(Branch b);
std::string_view to_string(Spin s);
std::string_view to_string(Zone z);

/// +1 for the plus branch, -1 for the minus branch.
inline double branch_sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

struct BranchKinematics {
    double energy = 0.0;
    double mass = 0.0;
    double p2 = 0.0;
    double q2_plus = 0.0;
    double q2_minus = 0.0;
    double delta = 0.0;
    double Q2_plus = 0.0;
    double Q2_minus = 0.0;
    Zone zone_minus = Zone::Diffusion;
    Zone zone_plus = Zone::Diffusion;

    double Q2(Branch b) const { return b == Branch::Plus ? Q2_plus : Q2_minus; }
    /// q∓², the "other" free momentum entering the M, N denominators.
    double q2_opposite(Branch b) const { return b == Branch::Plus ? q2_minus : q2_plus; }
};

struct EvanescentWindow {
    double e_low = 0.0;
    double e_up = 0.0;
    double width = 0.0;
};

struct ZoneLabels {
    Zone minus = Zone::Diffusion;
    Zone plus = Zone::Diffusion;
};

/// Branch-dependent amplitudes of the step spinor. Complex so that an
/// evanescent (imaginary) momentum is representable.
struct ModeCoefficients {
    Branch branch = Branch::Minus;
    Complex Q{};
    Complex A{};
    Complex M{};
    Complex N{};
};

/// δ for E ≥ m; exact zero when |W0| = 0.
double quaternionic_shift(double energy, double mass, const PotentialStep& pot);

/// Throws std::domain_error when E < m or m < 0.
BranchKinematics kinematics(double energy, double mass, const PotentialStep& pot);

EvanescentWindow evanescent_width(double mass, double v0, double w_abs);

ZoneLabels classify_zone(double energy, double mass, const PotentialStep& pot);

/// Principal square root: positive real, or positive imaginary when Q² < 0.
Complex principal_momentum(double Q2);

/// A = Q / (E ± V0 + m ± δ/(E - m)). Needs E > m.
Complex branch_amplitude(double energy, double mass, const PotentialStep& pot, Branch branch);

/// A, M, N for one branch. Throws std::domain_error at E ≤ m (the δ/(E - m)
/// pole) or when a denominator vanishes (q∓² = Q±² resonance).
ModeCoefficients mode_coefficients(double energy, double mass, const PotentialStep& pot,
                                   Branch branch);

/// Applies the Q → -Q map: A → -A, M → M, N → -N.
ModeCoefficients reversed(const ModeCoefficients& c);

/// Two-component selector χ placed into slot 0 (up) or 1 (down) of each block.
inline std::size_t spin_slot(Spin s) { return s == Spin::Up ? 0 : 1; }
/// Eigenvalue of σ₃ on χ.
inline double sigma3_sign(Spin s) { return s == Spin::Up ? 1.0 : -1.0; }

/// Step spinor for one branch:
///   minus: [(1 - jW0M)χ ; (A - jW0N)σ₃χ]
///   plus : [(A - jW̄0N)σ₃χ ; (1 - jW̄0M)χ]
/// direction = -1 uses the reversed coefficients and e^{-iQz}.
PlaneWaveState step_spinor(double energy, double mass, const PotentialStep& pot, Branch branch,
                           int direction = 1, Spin spin = Spin::Up);

struct ConsistencyResidual {
    // nullopt: undefined (|W0| = 0, where the jW0 terms are absent, or coefficients singular)
    std::optional<double> minus;
    std::optional<double> plus;
};

/// |A + N̄/M̄| for both branches. A diagnostic only; infinity when M = 0.
ConsistencyResidual consistency_residual(double energy, double mass, const PotentialStep& pot);

}  // namespace qdirac
