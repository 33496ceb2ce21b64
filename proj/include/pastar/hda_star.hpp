#pragma once

#include "pastar/local_frontier.hpp"
#include "pastar/search.hpp"
#include "pastar/sync.hpp"

#include <chrono>
#include <cstdint>

namespace pastar {

/// Maps each cell to the worker that owns it.
class OwnerHash
{
public:
    static constexpr std::uint64_t kMultiplierX = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kMultiplierY = 0xC2B2AE3D27D4EB4FULL;

    explicit OwnerHash(int thread_count);

    /// mix64(x * kMultiplierX + y * kMultiplierY) mod thread_count.
    WorkerId owner(Position p) const noexcept;

    int thread_count() const noexcept { return threads_; }

private:
    int threads_;
};

/// One HDA* worker's loop body, steppable on its own so the message-first
/// rule can be driven deterministically.
class HdaWorker
{
public:
    enum class Step {
        Drained,  ///< inbox was non-empty; messages handled, nothing expanded
        Expanded, ///< inbox was empty; one node popped and expanded
        Idle,     ///< inbox and OPEN both empty (after pruning)
    };

    HdaWorker(WorkerId id, const Grid& grid, const HeuristicKind& kind, const OwnerHash& hash,
              MessageFabric& fabric, Incumbent& incumbent, LocalFrontier& local);

    Step step();

    std::uint64_t expanded() const noexcept { return expanded_; }
    std::uint64_t foreign_admissions() const noexcept { return foreign_; }

private:
    WorkerId id_;
    const Grid& grid_;
    const HeuristicKind& kind_;
    const OwnerHash& hash_;
    MessageFabric& fabric_;
    Incumbent& incumbent_;
    LocalFrontier& local_;
    std::vector<WorkerMessage> inbound_;
    std::uint64_t expanded_ = 0;
    std::uint64_t foreign_ = 0;
};

struct HdaOptions
{
    int threads = 1;
    std::chrono::milliseconds timeout{60000};
};

struct HdaReport
{
    SearchResult result;
    /// Nodes inserted by a worker other than their owner. Only rerouted
    /// messages (owner already closed) can cause this.
    std::uint64_t foreign_admissions = 0;
};

/// Hash-distributed A*. Each worker handles its inbox before expanding, and
/// sends every successor to the successor's owner.
HdaReport hda_search_report(const Grid& grid, const HeuristicKind& kind, const HdaOptions& options);

inline SearchResult hda_search(const Grid& grid, const HeuristicKind& kind, const HdaOptions& options)
{
    return hda_search_report(grid, kind, options).result;
}

inline SearchResult hda_search(const Grid& grid, const HeuristicKind& kind, int threads)
{
    return hda_search(grid, kind, HdaOptions{threads});
}

} // namespace pastar
