#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace recal {

/// Bisection on [lo, hi]; f(lo) and f(hi) must have opposite (or zero) signs.
/// Stops when the bracket width drops below xtol or cannot shrink further.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) {
        throw std::runtime_error("bisect: no sign change over bracket");
    }
    for (int it = 0; it < max_iter && (hi - lo) > xtol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Expands [lo, hi] geometrically around seed until f changes sign.
/// f must be monotone for the result to bracket the unique root.
template <class F>
std::pair<double, double> expand_bracket(F&& f, double seed, double factor = 4.0,
                                         int max_steps = 200) {
    double lo = seed, hi = seed;
    double flo = f(lo), fhi = flo;
    for (int it = 0; it < max_steps; ++it) {
        if (flo == 0.0) return {lo, lo};
        if (fhi == 0.0) return {hi, hi};
        if (flo * fhi < 0.0) return {lo, hi};
        lo /= factor;
        hi *= factor;
        flo = f(lo);
        fhi = f(hi);
    }
    throw std::runtime_error("expand_bracket: no sign change found");
}

}  // namespace recal
