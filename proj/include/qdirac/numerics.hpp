#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace qdirac {

/// Bisection on a bracket with f(lo)·f(hi) ≤ 0. Stops when the bracket is
/// narrower than tol or after max_iter halvings.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-14,
              int max_iter = 200);

/// All sign changes of f on a uniform grid over [lo, hi], each refined by
/// bisection. A grid point where f is exactly zero counts as a root.
std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi,
                                  int samples, double tol = 1e-14);

/// Seeded generator with a fixed mapping to doubles, so sweeps are
/// reproducible independent of the standard library's distributions.
class SweepRng {
public:
    explicit SweepRng(std::uint64_t seed) : engine_{seed} {}

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace qdirac
