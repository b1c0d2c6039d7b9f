#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qdirac/bag_model.hpp"
#include "qdirac/nonrel_limit.hpp"

using namespace qdirac;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("parameters at E = sqrt(2), m = 1, |W0| = 0.25") {
    const NonRelParams r = nr_parameters(std::sqrt(2.0), 1.0, 0.25);
    CHECK(r.p == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.Q_plus == doctest::Approx(1.25));
    CHECK(r.Q_minus == doctest::Approx(0.75));
    CHECK(r.A_plus == doctest::Approx(0.414214).epsilon(1e-6));
    CHECK(r.A_minus == r.A_plus);
    CHECK(r.M_plus == doctest::Approx(-r.A_plus / 0.25));
    CHECK(r.M_minus == doctest::Approx(r.A_plus / 0.25));
    CHECK(r.N_plus == -4.0);
    CHECK(r.N_minus == 4.0);
    CHECK(!r.flipped_regime);
}

TEST_CASE("agrees with the general coefficients at V0 = 0") {
    const double E = 2.7, m = 1.1, w = 0.6;
    const NonRelParams r = nr_parameters(E, m, w);
    const PotentialStep pot{0.0, w, 0.0};
    const ModeCoefficients cm = mode_coefficients(E, m, pot, Branch::Minus);
    const ModeCoefficients cp = mode_coefficients(E, m, pot, Branch::Plus);
    CHECK(cm.A.real() == doctest::Approx(r.A_minus).epsilon(1e-13));
    CHECK(cm.M.real() == doctest::Approx(r.M_minus).epsilon(1e-12));
    CHECK(cm.N.real() == doctest::Approx(r.N_minus).epsilon(1e-12));
    CHECK(cp.M.real() == doctest::Approx(r.M_plus).epsilon(1e-12));
    CHECK(cp.N.real() == doctest::Approx(r.N_plus).epsilon(1e-12));
}

TEST_CASE("amplitudes fall off like 1/m") {
    const double p = 1.0, w = 0.5;
    std::array<NonRelParams, 3> r{};
    const std::array<double, 3> masses{1e2, 1e3, 1e4};
    for (std::size_t i = 0; i < 3; ++i) r[i] = nr_parameters(std::hypot(p, masses[i]), masses[i], w);
    for (std::size_t i = 0; i + 1 < 3; ++i) {
        CHECK(std::abs(r[i].A_minus / r[i + 1].A_minus / 10.0 - 1.0) < 0.02);
        CHECK(std::abs(r[i].M_plus / r[i + 1].M_plus / 10.0 - 1.0) < 0.02);
        CHECK(std::abs(r[i].M_minus / r[i + 1].M_minus / 10.0 - 1.0) < 0.02);
    }
}

TEST_CASE("flipped regime") {
    const NonRelParams r = nr_parameters(std::hypot(0.3, 1.0), 1.0, 0.5);
    CHECK(r.flipped_regime);
    CHECK(r.Q_minus == doctest::Approx(0.2));
    CHECK(r.A_minus == doctest::Approx(-r.A_plus));
    CHECK(r.N_minus == doctest::Approx(-2.0));
    CHECK(r.M_minus == doctest::Approx(r.A_plus / 0.5));
    CHECK(r.Q_plus == doctest::Approx(0.8));

    CHECK_THROWS_AS(nr_parameters(2.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(nr_parameters(1.0, 1.0, 0.5), std::domain_error);
}

TEST_CASE("limiting spinors") {
    const NonRelParams small = nr_parameters(std::hypot(1.0, 1e3), 1e3, 0.1);
    const NonRelParams large = nr_parameters(std::hypot(3.0, 1e3), 1e3, 2.0);
    for (Branch b : {Branch::Minus, Branch::Plus}) {
        for (Spin sp : {Spin::Up, Spin::Down}) {
            const PlaneWaveState a = nr_wavefunction(b, sp, small, 0.4);
            const PlaneWaveState c = nr_wavefunction(b, sp, large, 0.4);
            CHECK(a.spinor == c.spinor);
            CHECK(norm2(a.spinor) == doctest::Approx(2.0));
            CHECK(a.time_sign == TimeSign::Positive);
        }
    }
    // φ = 0: the j-component is j times χ
    const PlaneWaveState m0 = nr_wavefunction(Branch::Minus, Spin::Up, small, 0.0);
    CHECK(m0.spinor[2] == -Quaternion::j());
    const PlaneWaveState p0 = nr_wavefunction(Branch::Plus, Spin::Up, small, 0.0);
    CHECK(p0.spinor[0] == Quaternion::j());
    CHECK(p0.spinor[2] == Quaternion::one());
}

TEST_CASE("step spinors tend to the limiting forms at large mass") {
    const double p = 1.0, w = 0.5, phi = 0.9, m = 1e5;
    const double E = std::hypot(p, m);
    const NonRelParams r = nr_parameters(E, m, w);
    const PotentialStep pot{0.0, w, phi};
    for (Branch b : {Branch::Minus, Branch::Plus}) {
        for (Spin sp : {Spin::Up, Spin::Down}) {
            const QSpinor step = step_spinor(E, m, pot, b, 1, sp).spinor;
            const QSpinor limit = nr_wavefunction(b, sp, r, phi).spinor;
            CHECK(norm(step - limit) < 1e-4);
        }
    }
}

TEST_CASE("infinite-well levels") {
    CHECK(nr_momenta(1.0, 1)[0] == doctest::Approx(pi));
    const auto lv = nr_quantize(1.0, 3, 1.0, 0.5, Branch::Minus);
    const double p = pi + 0.5;
    CHECK(std::abs(lv[0].energy - std::sqrt(p * p + 1.0)) < 1e-14);
    for (const auto& l : lv) CHECK(std::abs(std::sin(l.q_n * 1.0)) < 1e-12);

    const auto plus = nr_quantize(2.0, 4, 1.0, 0.5, Branch::Plus);
    for (const auto& l : plus) CHECK(l.energy * l.energy == doctest::Approx(l.eff_momentum * l.eff_momentum + 1.0));

    for (double L : {0.7, 1.0, 2.3}) {
        const auto nr = nr_momenta(L, 12);
        const auto bag = quantized_momenta(L, 12);
        for (std::size_t i = 0; i + 1 < nr.size(); ++i) CHECK(nr[i + 1] - nr[i] == 2.0 * (bag[i + 1] - bag[i]));
    }
    CHECK_THROWS_AS(nr_momenta(-1.0, 2), std::invalid_argument);
}
