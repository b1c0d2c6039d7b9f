#include "qdirac/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace qdirac {

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol, int max_iter) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi)) throw std::invalid_argument("bisect: root is not bracketed");

    for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi,
                                  int samples, double tol) {
    if (samples < 2 || !(hi > lo)) throw std::invalid_argument("bracket_roots: bad grid");
    std::vector<double> roots;
    const double h = (hi - lo) / (samples - 1);
    double x0 = lo;
    double f0 = f(x0);
    if (f0 == 0.0) roots.push_back(x0);
    for (int i = 1; i < samples; ++i) {
        const double x1 = i == samples - 1 ? hi : lo + i * h;
        const double f1 = f(x1);
        if (f1 == 0.0) {
            roots.push_back(x1);
        } else if (f0 != 0.0 && std::signbit(f0) != std::signbit(f1)) {
            roots.push_back(bisect(f, x0, x1, tol));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

}  // namespace qdirac
