#include "recal/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace recal {

std::uint64_t splitmix64(std::uint64_t state) {
    state += 0x9E3779B97F4A7C15ULL;
    state = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9ULL;
    state = (state ^ (state >> 27)) * 0x94D049BB133111EBULL;
    return state ^ (state >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t k) {
    return splitmix64(base + (k + 1) * 0x9E3779B97F4A7C15ULL);
}

double Rng::uniform01() { return (engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform_open01() {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return u;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    for (;;) {
        const double u = 2.0 * uniform01() - 1.0;
        const double v = 2.0 * uniform01() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            const double m = std::sqrt(-2.0 * std::log(s) / s);
            spare_ = v * m;
            have_spare_ = true;
            return u * m;
        }
    }
}

double Rng::gamma(double shape) {
    if (!(shape > 0.0)) throw std::domain_error("gamma: shape must be positive");
    if (shape < 1.0) {
        // boost: draw at shape+1, multiply by U^(1/shape)
        const double g = gamma(shape + 1.0);
        return g * std::pow(uniform_open01(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, w;
        do {
            x = normal();
            w = 1.0 + c * x;
        } while (w <= 0.0);
        w = w * w * w;
        const double u = uniform_open01();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * w;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - w + std::log(w))) return d * w;
    }
}

double Rng::beta(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::domain_error("beta: shape parameters must be positive");
    }
    const double g1 = gamma(alpha);
    const double g2 = gamma(beta);
    if (g1 == 0.0 && g2 == 0.0) {
        // both gammas below double range (tiny shapes); the mass sits in the
        // two corners, split by the mean
        return uniform01() < alpha / (alpha + beta) ? 1.0 : 0.0;
    }
    return g1 / (g1 + g2);
}

}  // namespace recal
