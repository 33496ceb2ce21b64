#pragma once

#include <array>
#include <cstdint>

namespace pastar {

/// SplitMix64 step. Used for seeding and as a standalone 64-bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stateless avalanche finalizer (the SplitMix64 output function).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Maps a 64-bit value onto [0, bound) by multiply-shift.
constexpr std::uint64_t reduce_to(std::uint64_t value, std::uint64_t bound) noexcept
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(value) * bound) >> 64);
}

/// xoshiro256** 1.0 (Blackman & Vigna), seeded from one word via SplitMix64.
/// Output is bit-identical on every platform, which keeps generated grids
/// reproducible across implementations.
class Xoshiro256
{
public:
    explicit constexpr Xoshiro256(std::uint64_t seed) noexcept
    {
        std::uint64_t sm = seed;
        for (auto& word : s_)
            word = splitmix64(sm);
    }

    constexpr std::uint64_t next() noexcept
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform real in [0, 1) with 53 bits of precision.
    constexpr double next_double() noexcept
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    constexpr std::uint64_t next_below(std::uint64_t bound) noexcept
    {
        return reduce_to(next(), bound);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept
    {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
};

} // namespace pastar
