#pragma once

#include <complex>
#include <cstdint>
#include <limits>

namespace illume {

/**
 * Counter-based generator: the n-th output is a pure function of (key, n).
 *
 * Streams are derived with split(), so independent workers (restarts, grid
 * cells, measurement shards) draw from disjoint sequences determined only by
 * the seed and their index. Normal variates use Box-Muller rather than
 * std::normal_distribution so results do not depend on the standard library.
 */
class CounterRng {
  public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform on [0, 1).
    double uniform();
    double normal();
    /// Independent N(0,1) real and imaginary parts.
    std::complex<double> complex_normal();

    CounterRng split(std::uint64_t stream) const;

  private:
    CounterRng(std::uint64_t key, std::uint64_t counter, int);

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace illume
