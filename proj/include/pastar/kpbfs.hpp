#pragma once

#include "pastar/search.hpp"
#include "pastar/sync.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <queue>
#include <vector>

namespace pastar {

/// OPEN and CLOSED shared by every K-parallel worker, each behind its own
/// mutex. Lock order is always open before closed.
class SharedFrontier
{
public:
    explicit SharedFrontier(const Grid& grid);

    void push(SearchNode node);
    void push_all(std::vector<SearchNode>& nodes);

    /// Records g for p if it is strictly better than what CLOSED holds.
    bool try_record(Position p, double g, std::optional<Position> parent);
    double best_g(Position p) const;

    /// Pops up to k best nodes in a single open-lock acquisition, silently
    /// dropping stale entries and entries with f >= bound.
    std::vector<SearchNode> expand_batch(std::size_t k, double bound = kInfinity);

    /// Blocking worker-side variant of expand_batch. Returns an empty batch
    /// once OPEN is exhausted with no expansion in flight (search over), or
    /// when `abort` is raised. A non-empty batch marks the caller in flight
    /// until it calls finish().
    std::vector<SearchNode> acquire(std::size_t k, const Incumbent& incumbent, const std::atomic<bool>& abort);

    /// Publishes the successors of an acquired batch and clears the in-flight mark.
    void finish(std::vector<SearchNode>& successors);

    std::size_t open_size() const;
    std::uint64_t pushes() const;
    std::uint64_t pops() const;

    std::vector<Position> path_to_end() const;

private:
    std::vector<SearchNode> pop_locked(std::size_t k, double bound);

    const Grid& grid_;

    mutable std::mutex open_mutex_;
    std::condition_variable open_cv_;
    std::priority_queue<SearchNode, std::vector<SearchNode>, NodeOrder> open_;
    int in_flight_ = 0;
    bool exhausted_ = false;
    std::uint64_t pushes_ = 0;
    std::uint64_t pops_ = 0;

    mutable std::mutex closed_mutex_;
    std::vector<double> best_g_;
    std::vector<std::uint32_t> parent_;
};

struct KpbfsOptions
{
    int threads = 1;
    std::size_t batch = 1; ///< nodes per lock acquisition; K = threads * batch
    std::chrono::milliseconds timeout{60000};
};

/// Centralized K-parallel best-first search. Workers keep expanding after the
/// first goal pop, pruning against the incumbent, until OPEN drains.
SearchResult kpbfs_search(const Grid& grid, const HeuristicKind& kind, const KpbfsOptions& options);

inline SearchResult kpbfs_search(const Grid& grid, const HeuristicKind& kind, int threads)
{
    return kpbfs_search(grid, kind, KpbfsOptions{threads});
}

} // namespace pastar
