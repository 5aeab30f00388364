#pragma once

#include <cstdint>

namespace kantorovich {

/// Counter-based normal generator.
///
/// Every draw is a pure function of (seed, trial, index):
///   key   = mix(seed + 0x9E3779B97F4A7C15 * (trial + 1))
///   a     = mix(key ^ mix(2 * index)),  b = mix(key ^ mix(2 * index + 1))
///   u1    = ((a >> 11) + 1) * 2^-53   in (0, 1]
///   u2    = (b >> 11) * 2^-53         in [0, 1)
///   z     = sqrt(-2 ln u1) * cos(2 pi u2)
/// where mix is the SplitMix64 finalizer. No state is carried between draws,
/// so the order of evaluation never changes the result.
class NoiseStream {
public:
    NoiseStream(std::uint64_t seed, std::uint64_t trial) noexcept;

    double uniform(std::uint64_t index) const noexcept;
    double standard_normal(std::uint64_t index) const noexcept;

    std::uint64_t key() const noexcept { return key_; }

private:
    std::uint64_t key_;
};

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

}  // namespace kantorovich
