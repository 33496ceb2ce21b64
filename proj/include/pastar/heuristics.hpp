#pragma once

#include "pastar/grid.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pastar {

enum class HeuristicVariant { Euclidean, Manhattan, Inadmissible, Expensive, ExpensiveInadmissible };

inline constexpr double kDefaultNoiseScale = 5.0;
inline constexpr std::chrono::microseconds kDefaultDelay{1000};

struct HeuristicKind
{
    HeuristicVariant variant = HeuristicVariant::Manhattan;
    double noise_scale = kDefaultNoiseScale;  ///< Inadmissible variants only.
    std::chrono::microseconds delay = kDefaultDelay; ///< Expensive variants only.
    std::uint64_t noise_seed = 0;

    static HeuristicKind euclidean() { return {HeuristicVariant::Euclidean}; }
    static HeuristicKind manhattan() { return {HeuristicVariant::Manhattan}; }
    static HeuristicKind inadmissible(double noise_scale = kDefaultNoiseScale, std::uint64_t noise_seed = 0)
    {
        return {HeuristicVariant::Inadmissible, noise_scale, kDefaultDelay, noise_seed};
    }
    static HeuristicKind expensive(std::chrono::microseconds delay = kDefaultDelay)
    {
        return {HeuristicVariant::Expensive, kDefaultNoiseScale, delay, 0};
    }
    static HeuristicKind expensive_inadmissible(std::chrono::microseconds delay = kDefaultDelay,
                                                double noise_scale = kDefaultNoiseScale,
                                                std::uint64_t noise_seed = 0)
    {
        return {HeuristicVariant::ExpensiveInadmissible, noise_scale, delay, noise_seed};
    }

    bool uses_noise() const noexcept
    {
        return variant == HeuristicVariant::Inadmissible || variant == HeuristicVariant::ExpensiveInadmissible;
    }
    bool uses_delay() const noexcept
    {
        return variant == HeuristicVariant::Expensive || variant == HeuristicVariant::ExpensiveInadmissible;
    }

    /// Throws std::invalid_argument if a variant's parameter is out of range.
    void validate() const;
};

double euclidean_distance(Position a, Position b) noexcept;
double manhattan_distance(Position a, Position b) noexcept;

/// Deterministic delta in (0, noise_scale] keyed by (seed, from, goal); 0 when scale is 0.
double heuristic_noise(double noise_scale, std::uint64_t seed, Position from, Position goal) noexcept;

/// h(from). Expensive variants block the calling thread for kind.delay.
double evaluate(const HeuristicKind& kind, Position from, Position goal);

bool is_admissible(const HeuristicKind& kind) noexcept;

/// CLI names: euclidean, manhattan, inadmissible, expensive, expensive-inadmissible.
std::string_view heuristic_name(HeuristicVariant variant) noexcept;
std::optional<HeuristicVariant> parse_heuristic_name(std::string_view name) noexcept;

} // namespace pastar
