#pragma once

#include <cstdint>
#include <random>

namespace recal {

/// SplitMix64 finalizer; used both to condition raw seeds and to derive
/// independent per-stream seeds.
std::uint64_t splitmix64(std::uint64_t state);

/// Stream-splitting rule: child k of a base seed is
/// splitmix64(base + (k+1) * 0x9E3779B97F4A7C15). Scenario evaluation and
/// Monte Carlo cross-checks derive their per-task seeds this way, so tasks
/// remain independent and reproducible regardless of evaluation order.
std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t k);

/// Deterministic random source: mt19937_64 with explicitly specified
/// double mappings (no std::*_distribution, whose output is
/// implementation-defined). Gamma draws use Marsaglia-Tsang squeeze
/// rejection, normals use the Marsaglia polar method; both are exact.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Uniform on [0,1): 53-bit mantissa of the next engine output.
    double uniform01();
    /// Uniform on (0,1): rejects exact zeros.
    double uniform_open01();
    double normal();
    double gamma(double shape);
    double beta(double alpha, double beta);

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace recal
