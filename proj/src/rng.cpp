#include "illume/rng.hpp"

#include <cmath>
#include <numbers>

namespace illume {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finaliser.
constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t derive_key(std::uint64_t parent, std::uint64_t stream) {
    return mix(mix(parent ^ 0x5851f42d4c957f2dULL) + (stream + 1) * kGolden);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(derive_key(mix(seed), stream)) {}

CounterRng::CounterRng(std::uint64_t key, std::uint64_t counter, int)
    : key_(key), counter_(counter) {}

CounterRng::result_type CounterRng::operator()() {
    ++counter_;
    return mix(key_ + counter_ * kGolden);
}

double CounterRng::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double CounterRng::normal() {
    return complex_normal().real();
}

std::complex<double> CounterRng::complex_normal() {
    // u1 in (0, 1] keeps the log finite.
    const double u1 = static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

CounterRng CounterRng::split(std::uint64_t stream) const {
    return CounterRng(derive_key(key_, stream), 0, 0);
}

} // namespace illume
