#pragma once

#include <cmath>

#include "qdirac/quaternion.hpp"

namespace qdirac {

/// Constant quaternionic vector potential on the z > 0 side of a step.
///
/// The three real components (V1, V2, V3) are regrouped as V0 = V1 and
/// W0 = V3 + iV2 = |W0| e^{iφ}. The potential enters the Dirac operator as
/// the left factor iV1 + jV2 + kV3, which in symplectic form is (iV0, -iW0).
struct PotentialStep {
    double v0 = 0.0;       // time-component strength V0
    double w_abs = 0.0;    // |W0|
    double w_phase = 0.0;  // φ in radians

    static PotentialStep from_components(double v1, double v2, double v3) {
        return {v1, std::hypot(v2, v3), std::atan2(v2, v3)};
    }

    double v2() const { return w_abs * std::sin(w_phase); }
    double v3() const { return w_abs * std::cos(w_phase); }
    Complex w0() const { return std::polar(w_abs, w_phase); }

    Quaternion potential_quaternion() const {
        return Quaternion{Complex{0.0, v0}, Complex{0.0, -1.0} * w0()};
    }
};

}  // namespace qdirac
