#pragma once

#include "pastar/local_frontier.hpp"
#include "pastar/search.hpp"
#include "pastar/sync.hpp"

#include <chrono>
#include <cstdint>
#include <mutex>
#include <queue>
#include <variant>
#include <vector>

namespace pastar {

struct RandomStrategy
{
    std::uint64_t seed = 0;
};

struct BlackboardStrategy
{
    double threshold = 5.0;
    std::size_t batch = 4;
};

using DistributionStrategy = std::variant<RandomStrategy, BlackboardStrategy>;

/// Worker in [0, threads) for the step-th successor of a random stream.
/// Uniform, and a pure function of its arguments.
WorkerId random_route(const RandomStrategy& strategy, std::uint64_t step, int threads) noexcept;

/// Pool of nodes shared by all workers under one mutex.
class Blackboard
{
public:
    void post(std::vector<SearchNode>& nodes);

    /// Removes up to k best nodes. Nodes with f >= bound are removed but not returned.
    std::size_t take(std::size_t k, double bound, std::vector<SearchNode>& out);

    double min_f() const;
    std::size_t size() const;
    bool empty() const { return size() == 0; }

private:
    friend struct BlackboardAccess;
    mutable std::mutex mutex_;
    std::priority_queue<SearchNode, std::vector<SearchNode>, NodeOrder> board_;
};

struct ExchangeResult
{
    std::size_t donated = 0;
    std::size_t taken = 0;    ///< removed from the board, including pruned ones
    std::size_t admitted = 0; ///< taken nodes that survived the local CLOSED check
};

/// One blackboard round for a worker. With l the local best f and b the
/// board's best f (+inf if empty): donate `batch` local nodes if
/// l + threshold < b; take `batch` board nodes if l > b + threshold.
/// The comparison and the transfer happen under the board lock.
ExchangeResult blackboard_exchange(LocalFrontier& local, Blackboard& board, double threshold, std::size_t batch,
                                   double bound = kInfinity);

struct DpaOptions
{
    int threads = 1;
    DistributionStrategy strategy = RandomStrategy{};
    std::chrono::milliseconds timeout{60000};
};

/// Decentralized parallel A*: private OPEN/CLOSED per worker, successors
/// spread by the chosen strategy, incumbent pruning, ledger termination.
/// Throws SearchHang if the watchdog fires.
SearchResult dpa_search(const Grid& grid, const HeuristicKind& kind, const DpaOptions& options);

} // namespace pastar
