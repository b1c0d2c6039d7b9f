#include "qdirac/step_solution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdirac {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool negligible(double value, double scale) { return std::abs(value) <= 64.0 * kEps * scale; }

}  // namespace

std::string_view to_string(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

std::string_view to_string(Spin s) { return s == Spin::Up ? "up" : "down"; }

std::string_view to_string(Zone z) {
    switch (z) {
        case Zone::Diffusion: return "diffusion";
        case Zone::Evanescent: return "evanescent";
        case Zone::Klein: return "klein";
    }
    return "unknown";
}

double quaternionic_shift(double energy, double mass, const PotentialStep& pot) {
    const double p2 = energy * energy - mass * mass;
    const double ev = energy * pot.v0;
    const double pw2 = p2 * pot.w_abs * pot.w_abs;
    const double root = std::sqrt(ev * ev + pw2);
    if (ev >= 0.0) {
        // sqrt(a² + b) - a = b / (sqrt(a² + b) + a); no cancellation for a ≥ 0
        const double den = root + ev;
        return den == 0.0 ? 0.0 : pw2 / den;
    }
    return root - ev;
}

BranchKinematics kinematics(double energy, double mass, const PotentialStep& pot) {
    if (!(mass >= 0.0)) throw std::domain_error("kinematics: mass must be non-negative");
    if (!(energy >= mass)) throw std::domain_error("kinematics: energy below the mass shell (E < m)");

    BranchKinematics k;
    k.energy = energy;
    k.mass = mass;
    k.p2 = energy * energy - mass * mass;
    const double ep = energy + pot.v0;
    const double em = energy - pot.v0;
    k.q2_plus = ep * ep - mass * mass;
    k.q2_minus = em * em - mass * mass;
    k.delta = quaternionic_shift(energy, mass, pot);
    const double w2 = pot.w_abs * pot.w_abs;
    k.Q2_plus = k.q2_plus + w2 + 2.0 * k.delta;
    k.Q2_minus = k.q2_minus + w2 - 2.0 * k.delta;

    const ZoneLabels z = classify_zone(energy, mass, pot);
    k.zone_minus = z.minus;
    k.zone_plus = z.plus;
    return k;
}

EvanescentWindow evanescent_width(double mass, double v0, double w_abs) {
    EvanescentWindow w;
    w.e_up = std::hypot(w_abs, mass + v0);
    w.e_low = std::max(mass, std::hypot(w_abs, mass - v0));
    w.width = w.e_up - w.e_low;
    return w;
}

ZoneLabels classify_zone(double energy, double mass, const PotentialStep& pot) {
    if (!(energy >= mass)) throw std::domain_error("classify_zone: energy below the mass shell (E < m)");
    const EvanescentWindow win = evanescent_width(mass, pot.v0, pot.w_abs);

    ZoneLabels z;
    z.plus = Zone::Diffusion;

    // When sqrt(|W0|² + (m - V0)²) < m the window opens at E = m itself.
    const double inner = std::hypot(pot.w_abs, mass - pot.v0);
    const bool opens_at_mass = inner < mass && energy == mass && energy < win.e_up;

    if ((energy > win.e_low && energy < win.e_up) || opens_at_mass) {
        z.minus = Zone::Evanescent;
    } else if (energy >= win.e_up) {
        z.minus = Zone::Diffusion;
    } else {
        z.minus = Zone::Klein;
    }
    return z;
}

Complex principal_momentum(double Q2) {
    return Q2 >= 0.0 ? Complex{std::sqrt(Q2), 0.0} : Complex{0.0, std::sqrt(-Q2)};
}

Complex branch_amplitude(double energy, double mass, const PotentialStep& pot, Branch branch) {
    if (!(energy > mass)) throw std::domain_error("mode coefficients: E = m is a pole of δ/(E - m)");
    const BranchKinematics k = kinematics(energy, mass, pot);
    const double s = branch_sign(branch);
    const Complex Q = principal_momentum(k.Q2(branch));
    const double shift = k.delta / (energy - mass);
    const double den = energy + s * pot.v0 + mass + s * shift;
    if (negligible(den, energy + std::abs(pot.v0) + mass + shift)) {
        throw std::domain_error("mode coefficients: vanishing denominator E ± V0 + m ± δ/(E - m)");
    }
    return Q / den;
}

ModeCoefficients mode_coefficients(double energy, double mass, const PotentialStep& pot,
                                   Branch branch) {
    const BranchKinematics k = kinematics(energy, mass, pot);
    const double s = branch_sign(branch);

    ModeCoefficients c;
    c.branch = branch;
    c.Q = principal_momentum(k.Q2(branch));
    c.A = branch_amplitude(energy, mass, pot, branch);

    const double den = k.q2_opposite(branch) - k.Q2(branch);
    if (negligible(den, std::abs(k.q2_opposite(branch)) + std::abs(k.Q2(branch)))) {
        throw std::domain_error("mode coefficients: resonant denominator q∓² = Q±²");
    }
    c.M = (energy - s * pot.v0 - mass + c.Q * c.A) / den;
    c.N = (c.Q + c.A * (energy - s * pot.v0 + mass)) / den;
    return c;
}

ModeCoefficients reversed(const ModeCoefficients& c) {
    return {c.branch, -c.Q, -c.A, c.M, -c.N};
}

PlaneWaveState step_spinor(double energy, double mass, const PotentialStep& pot, Branch branch,
                           int direction, Spin spin) {
    if (direction != 1 && direction != -1) throw std::invalid_argument("step_spinor: direction must be ±1");

    ModeCoefficients c;
    if (pot.w_abs == 0.0) {
        // The jW0 terms vanish identically; M and N are not needed (and are
        // 0/0 at V0 = 0).
        c.branch = branch;
        c.Q = principal_momentum(kinematics(energy, mass, pot).Q2(branch));
        c.A = branch_amplitude(energy, mass, pot, branch);
    } else {
        c = mode_coefficients(energy, mass, pot, branch);
    }
    const Complex Q = c.Q;
    if (direction < 0) c = reversed(c);

    const Complex W = branch == Branch::Minus ? pot.w0() : std::conj(pot.w0());
    const Quaternion unit_term{Complex{1.0, 0.0}, -W * c.M};
    const Quaternion amp_term = sigma3_sign(spin) * Quaternion{c.A, -W * c.N};

    PlaneWaveState st;
    const std::size_t s = spin_slot(spin);
    if (branch == Branch::Minus) {
        st.spinor[s] = unit_term;
        st.spinor[2 + s] = amp_term;
    } else {
        st.spinor[s] = amp_term;
        st.spinor[2 + s] = unit_term;
    }
    st.momentum = Q;
    st.energy = energy;
    st.direction = direction;
    return st;
}

ConsistencyResidual consistency_residual(double energy, double mass, const PotentialStep& pot) {
    ConsistencyResidual r;
    if (pot.w_abs == 0.0) return r;

    auto one = [&](Branch b) -> std::optional<double> {
        try {
            const ModeCoefficients c = mode_coefficients(energy, mass, pot, b);
            if (c.M == Complex{}) return std::numeric_limits<double>::infinity();
            return std::abs(c.A + std::conj(c.N) / std::conj(c.M));
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    };
    r.minus = one(Branch::Minus);
    r.plus = one(Branch::Plus);
    return r;
}

}  // namespace qdirac
