#ifndef CFSENSE_RNG_HPP
#define CFSENSE_RNG_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>

namespace cfsense {

/**
 * @brief Deterministic pseudo-random generator (xoshiro256** seeded via splitmix64).
 *
 * The standard-library distributions are implementation-defined, which would
 * break the byte-identical-output contract across toolchains. This generator
 * and its distribution helpers produce the same stream on every platform.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi);

    /// Standard normal via Box-Muller (cached second value).
    double normal();

    /// Circularly symmetric complex Gaussian with total variance `variance`.
    std::complex<double> complex_normal(double variance);

  private:
    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// splitmix64 step; the basis of all seed derivation below.
std::uint64_t splitmix64(std::uint64_t& state);

/// Mix a value into a seed (order-sensitive).
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value);

/// Derive an independent stream seed from a master seed and an index path.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path);

}  // namespace cfsense

#endif
