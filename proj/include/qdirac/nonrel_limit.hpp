#pragma once

/**
 * @file nonrel_limit.hpp
 * @brief Infinite well with V0 = 0 and a constant pure quaternionic potential.
 *
 * With V0 = 0 the step coefficients collapse to
 *
 *   Q± = p ± |W0|,  A = p/(E + m),  M± = ∓ p / (|W0|(E + m)),  N± = ∓ 1/|W0|,
 *
 * (regime p > |W0|). As m → ∞ at fixed p, A and M± vanish like 1/m and the
 * spinors tend to the constant forms
 *
 *   Ψ+ = (j e^{-iφ} σ₃χ, χ) e^{i(Q+ z + Et)},  Ψ- = (χ, -j e^{iφ} σ₃χ) e^{i(Q- z + Et)}.
 *
 * Dirichlet walls on the scalar superposition give Q_n = nπ/L and
 * E_n² = (Q_n ∓ |W0|)² + m².
 */

#include <vector>

#include "qdirac/dirac_algebra.hpp"
#include "qdirac/step_solution.hpp"

namespace qdirac {

struct NonRelParams {
    double energy = 0.0;
    double mass = 0.0;
    double p = 0.0;
    double w_abs = 0.0;
    double Q_plus = 0.0;
    double Q_minus = 0.0;
    double A_plus = 0.0;
    double A_minus = 0.0;
    double M_plus = 0.0;
    double M_minus = 0.0;
    double N_plus = 0.0;
    double N_minus = 0.0;
    // p < |W0|: the minus branch is written with Q- = |W0| - p and the
    // Q → -Q signs (A- and N- flipped).
    bool flipped_regime = false;
};

/// Throws std::invalid_argument at |W0| = 0 (M, N carry 1/|W0|) and
/// std::domain_error when E ≤ m.
NonRelParams nr_parameters(double energy, double mass, double w_abs);

/// Limiting constant spinors; time phase e^{+iEt} as written for this limit.
PlaneWaveState nr_wavefunction(Branch branch, Spin spin, const NonRelParams& params, double w_phase);

struct NonRelLevel {
    Branch branch = Branch::Minus;
    int n = 1;
    double q_n = 0.0;
    double eff_momentum = 0.0;
    double energy = 0.0;
};

/// Q_n = nπ/L
std::vector<double> nr_momenta(double length, int n_max);

std::vector<NonRelLevel> nr_quantize(double length, int n_max, double mass, double w_abs, Branch branch);

}  // namespace qdirac
