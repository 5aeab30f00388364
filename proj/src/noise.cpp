#include "kantorovich/noise.hpp"

#include <cmath>
#include <numbers>

namespace kantorovich {

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

NoiseStream::NoiseStream(std::uint64_t seed, std::uint64_t trial) noexcept
    : key_(splitmix64_mix(seed + 0x9E3779B97F4A7C15ULL * (trial + 1))) {}

double NoiseStream::uniform(std::uint64_t index) const noexcept {
    const std::uint64_t bits = splitmix64_mix(key_ ^ splitmix64_mix(2 * index + 1));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double NoiseStream::standard_normal(std::uint64_t index) const noexcept {
    const std::uint64_t a = splitmix64_mix(key_ ^ splitmix64_mix(2 * index));
    const double u1 = static_cast<double>((a >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform(index);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace kantorovich
