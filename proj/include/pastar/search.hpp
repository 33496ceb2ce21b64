#pragma once

#include "pastar/grid.hpp"
#include "pastar/heuristics.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pastar {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Sentinel for "no parent" in packed parent links.
inline constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

struct SearchNode
{
    Position position;
    double g = 0.0;
    double h = 0.0;
    double f = 0.0; ///< always g + h
    std::optional<Position> parent;

    static SearchNode make(Position position, double g, double h, std::optional<Position> parent = std::nullopt)
    {
        return {position, g, h, g + h, parent};
    }
};

/// Priority-queue comparator (max-heap semantics: returns true when a ranks
/// below b). Best node has the smallest f, then the largest g, then the
/// smallest row-major position.
struct NodeOrder
{
    bool operator()(const SearchNode& a, const SearchNode& b) const noexcept
    {
        if (a.f != b.f)
            return a.f > b.f;
        if (a.g != b.g)
            return a.g < b.g;
        if (a.position.y != b.position.y)
            return a.position.y > b.position.y;
        return a.position.x > b.position.x;
    }
};

/// Message-passing accounting reported by the decentralized engines.
struct MessageStats
{
    std::uint64_t sent = 0;
    std::uint64_t received = 0;
    std::uint64_t residual_inbox = 0; ///< messages left in any inbox at join
    std::uint64_t rerouted = 0;
};

struct SearchResult
{
    std::optional<double> cost; ///< empty when END is unreachable
    std::vector<Position> path;
    std::uint64_t nodes_expanded = 0;
    std::chrono::nanoseconds elapsed{0};
    MessageStats messages;

    bool reachable() const noexcept { return cost.has_value(); }
    double elapsed_seconds() const noexcept { return std::chrono::duration<double>(elapsed).count(); }
};

/// A parallel search exceeded its watchdog deadline.
class SearchHang : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A worker thread threw; the search was aborted.
class WorkerFailure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Textbook A*: stops at the first goal pop. Lazy deletion of stale entries,
/// reopening on strictly smaller g.
SearchResult astar_sequential(const Grid& grid, const HeuristicKind& kind);

/// Dijkstra over the unit-cost grid with no heuristic. Ground truth for tests.
SearchResult dijkstra_oracle(const Grid& grid);

/// Path starts at START, ends at END, moves cardinally through non-walls, and
/// cost equals the number of moves. An unreachable result is valid only when
/// END really is unreachable.
bool validate_path(const Grid& grid, const SearchResult& result);

/// Walks parent links back from END. parent_of returns kNoParent at START.
/// Returns an empty path if the chain is broken or cyclic.
std::vector<Position> reconstruct_path(const Grid& grid,
                                       const std::function<std::uint32_t(std::uint32_t)>& parent_of);

} // namespace pastar
