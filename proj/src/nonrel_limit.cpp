#include "qdirac/nonrel_limit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdirac {

NonRelParams nr_parameters(double energy, double mass, double w_abs) {
    if (w_abs == 0.0) {
        throw std::invalid_argument("nr_parameters: |W0| = 0 is singular (M and N carry 1/|W0|)");
    }
    if (!(energy > mass)) throw std::domain_error("nr_parameters: need E > m");

    NonRelParams r;
    r.energy = energy;
    r.mass = mass;
    r.w_abs = w_abs;
    r.p = std::sqrt(energy * energy - mass * mass);

    const double a = r.p / (energy + mass);
    r.Q_plus = r.p + w_abs;
    r.A_plus = a;
    r.M_plus = -a / w_abs;
    r.N_plus = -1.0 / w_abs;

    r.flipped_regime = r.p < w_abs;
    const double flip = r.flipped_regime ? -1.0 : 1.0;
    r.Q_minus = flip * (r.p - w_abs);
    r.A_minus = flip * a;
    r.M_minus = a / w_abs;
    r.N_minus = flip / w_abs;
    return r;
}

PlaneWaveState nr_wavefunction(Branch branch, Spin spin, const NonRelParams& params, double w_phase) {
    const std::size_t s = spin_slot(spin);
    const double s3 = sigma3_sign(spin);
    const Quaternion chi = Quaternion::one();

    PlaneWaveState st;
    st.energy = params.energy;
    st.direction = 1;
    st.time_sign = TimeSign::Positive;
    if (branch == Branch::Plus) {
        // j e^{-iφ} σ₃χ on top, χ below
        st.spinor[s] = s3 * Quaternion{Complex{}, std::polar(1.0, -w_phase)};
        st.spinor[2 + s] = chi;
        st.momentum = params.Q_plus;
    } else {
        st.spinor[s] = chi;
        st.spinor[2 + s] = -s3 * Quaternion{Complex{}, std::polar(1.0, w_phase)};
        st.momentum = params.Q_minus;
    }
    return st;
}

std::vector<double> nr_momenta(double length, int n_max) {
    if (!(length > 0.0)) throw std::invalid_argument("nr_momenta: L must be positive");
    if (n_max < 1) throw std::invalid_argument("nr_momenta: n_max must be at least 1");
    std::vector<double> q;
    for (int n = 1; n <= n_max; ++n) q.push_back(n * std::numbers::pi / length);
    return q;
}

std::vector<NonRelLevel> nr_quantize(double length, int n_max, double mass, double w_abs, Branch branch) {
    std::vector<NonRelLevel> out;
    const auto momenta = nr_momenta(length, n_max);
    for (std::size_t i = 0; i < momenta.size(); ++i) {
        NonRelLevel lv;
        lv.branch = branch;
        lv.n = static_cast<int>(i) + 1;
        lv.q_n = momenta[i];
        lv.eff_momentum = lv.q_n - branch_sign(branch) * w_abs;
        lv.energy = std::hypot(lv.eff_momentum, mass);
        out.push_back(lv);
    }
    return out;
}

}  // namespace qdirac
