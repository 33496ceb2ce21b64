#include "pastar/heuristics.hpp"

#include "pastar/rng.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace pastar {

namespace {

constexpr std::array<std::pair<HeuristicVariant, std::string_view>, 5> kNames{{
    {HeuristicVariant::Euclidean, "euclidean"},
    {HeuristicVariant::Manhattan, "manhattan"},
    {HeuristicVariant::Inadmissible, "inadmissible"},
    {HeuristicVariant::Expensive, "expensive"},
    {HeuristicVariant::ExpensiveInadmissible, "expensive-inadmissible"},
}};

} // namespace

void HeuristicKind::validate() const
{
    if (uses_delay() && delay.count() <= 0)
        throw std::invalid_argument("expensive heuristics need a positive delay");
    if (uses_noise() && !(noise_scale > 0.0))
        throw std::invalid_argument("inadmissible heuristics need a positive noise scale");
    if (!std::isfinite(noise_scale) || noise_scale < 0.0)
        throw std::invalid_argument("noise scale must be finite and non-negative");
}

double euclidean_distance(Position a, Position b) noexcept
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

double manhattan_distance(Position a, Position b) noexcept
{
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

double heuristic_noise(double noise_scale, std::uint64_t seed, Position from, Position goal) noexcept
{
    if (noise_scale <= 0.0)
        return 0.0;
    std::uint64_t key = mix64(seed);
    for (int v : {from.x, from.y, goal.x, goal.y})
        key = mix64(key ^ static_cast<std::uint32_t>(v));
    // (k + 1) / 2^53 lies in (0, 1].
    const double unit = static_cast<double>((key >> 11) + 1) * 0x1.0p-53;
    return unit * noise_scale;
}

double evaluate(const HeuristicKind& kind, Position from, Position goal)
{
    switch (kind.variant) {
    case HeuristicVariant::Manhattan:
        return manhattan_distance(from, goal);
    case HeuristicVariant::Euclidean:
        return euclidean_distance(from, goal);
    case HeuristicVariant::Inadmissible:
        return euclidean_distance(from, goal) + heuristic_noise(kind.noise_scale, kind.noise_seed, from, goal);
    case HeuristicVariant::Expensive:
        std::this_thread::sleep_for(kind.delay);
        return euclidean_distance(from, goal);
    case HeuristicVariant::ExpensiveInadmissible:
        std::this_thread::sleep_for(kind.delay);
        return euclidean_distance(from, goal) + heuristic_noise(kind.noise_scale, kind.noise_seed, from, goal);
    }
    return 0.0;
}

bool is_admissible(const HeuristicKind& kind) noexcept
{
    return !kind.uses_noise();
}

std::string_view heuristic_name(HeuristicVariant variant) noexcept
{
    for (const auto& [v, name] : kNames)
        if (v == variant)
            return name;
    return "unknown";
}

std::optional<HeuristicVariant> parse_heuristic_name(std::string_view name) noexcept
{
    for (const auto& [v, n] : kNames)
        if (n == name)
            return v;
    return std::nullopt;
}

} // namespace pastar
