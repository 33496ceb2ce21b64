#include "pastar/dpa_star.hpp"

#include "pastar/rng.hpp"
#include "termination.hpp"

#include <stdexcept>

namespace pastar {

WorkerId random_route(const RandomStrategy& strategy, std::uint64_t step, int threads) noexcept
{
    if (threads <= 1)
        return 0;
    const std::uint64_t z = mix64(strategy.seed + (step + 1) * 0x9E3779B97F4A7C15ULL);
    return static_cast<WorkerId>(reduce_to(z, static_cast<std::uint64_t>(threads)));
}

void Blackboard::post(std::vector<SearchNode>& nodes)
{
    std::lock_guard lock(mutex_);
    for (auto& n : nodes)
        board_.push(std::move(n));
    nodes.clear();
}

std::size_t Blackboard::take(std::size_t k, double bound, std::vector<SearchNode>& out)
{
    std::lock_guard lock(mutex_);
    std::size_t removed = 0;
    for (; removed < k && !board_.empty(); ++removed) {
        if (board_.top().f < bound)
            out.push_back(board_.top());
        board_.pop();
    }
    return removed;
}

double Blackboard::min_f() const
{
    std::lock_guard lock(mutex_);
    return board_.empty() ? kInfinity : board_.top().f;
}

std::size_t Blackboard::size() const
{
    std::lock_guard lock(mutex_);
    return board_.size();
}

struct BlackboardAccess
{
    static std::mutex& mutex(Blackboard& b) { return b.mutex_; }
    static auto& queue(Blackboard& b) { return b.board_; }
};

ExchangeResult blackboard_exchange(LocalFrontier& local, Blackboard& board, double threshold, std::size_t batch,
                                   double bound)
{
    ExchangeResult result;
    const double local_best = local.min_f(bound);

    std::lock_guard lock(BlackboardAccess::mutex(board));
    auto& queue = BlackboardAccess::queue(board);
    const double board_best = queue.empty() ? kInfinity : queue.top().f;

    if (local_best < kInfinity && local_best + threshold < board_best) {
        for (auto& node : local.take_best(batch, bound)) {
            queue.push(std::move(node));
            ++result.donated;
        }
    } else if (board_best < kInfinity && local_best > board_best + threshold) {
        while (result.taken < batch && !queue.empty()) {
            SearchNode node = queue.top();
            queue.pop();
            ++result.taken;
            if (node.f < bound && local.admit_transferred(node))
                ++result.admitted;
        }
    }
    return result;
}

SearchResult dpa_search(const Grid& grid, const HeuristicKind& kind, const DpaOptions& options)
{
    const int threads = options.threads;
    if (threads < 1)
        throw std::invalid_argument("dpa needs at least one thread");
    const auto* random = std::get_if<RandomStrategy>(&options.strategy);
    const auto* blackboard = std::get_if<BlackboardStrategy>(&options.strategy);
    if (blackboard && (!(blackboard->threshold > 0.0) || blackboard->batch < 1))
        throw std::invalid_argument("blackboard threshold must be > 0 and batch >= 1");

    const auto t0 = std::chrono::steady_clock::now();
    const Position goal = grid.end();

    std::vector<LocalFrontier> frontiers(static_cast<std::size_t>(threads), LocalFrontier(grid));
    MessageFabric fabric(threads);
    DynamicBarrier barrier(threads);
    Incumbent incumbent;
    Blackboard board;
    std::atomic<bool> abort{false};
    std::atomic<std::uint64_t> expanded{0};

    for (WorkerId id = 0; id < threads; ++id)
        fabric.report_busy(id);
    frontiers[0].admit(SearchNode::make(grid.start(), 0.0, evaluate(kind, grid.start(), goal)));

    run_workers(
        threads, options.timeout, abort,
        [&](WorkerId id) {
            detail::WorkerExitGuard guard(id, fabric, barrier);
            auto& local = frontiers[static_cast<std::size_t>(id)];
            const RandomStrategy stream{random ? mix64(random->seed ^ static_cast<std::uint64_t>(id)) : 0};
            std::uint64_t step = 0;
            std::uint64_t local_expanded = 0;
            std::vector<WorkerMessage> inbound;
            Position buf[4];

            while (!abort.load(std::memory_order_acquire)) {
                inbound.clear();
                fabric.drain(id, inbound);
                for (auto& m : inbound)
                    local.stage(std::move(m.node));
                local.flush_buffer();

                if (blackboard) {
                    const auto ex =
                        blackboard_exchange(local, board, blackboard->threshold, blackboard->batch, incumbent.cost());
                    fabric.note_sent(ex.donated);
                    fabric.note_received(ex.taken);
                }

                const auto node = local.pop_best(incumbent.cost());
                if (!node) {
                    const bool pool_clear = !blackboard || board.empty();
                    if (detail::settle_idle(id, fabric, barrier, incumbent, pool_clear) == detail::IdleOutcome::Exit)
                        break;
                    continue;
                }

                ++local_expanded;
                detail::pace(local_expanded);
                if (node->position == goal) {
                    incumbent.try_improve(node->g, id);
                    continue;
                }
                const int count = neighbors(grid, node->position, buf);
                for (int i = 0; i < count; ++i) {
                    const double g = node->g + 1.0;
                    const WorkerId dest = random ? random_route(stream, step++, threads) : id;
                    if (local.dominated(buf[i], g))
                        continue;
                    const double h = evaluate(kind, buf[i], goal);
                    if (g + h >= incumbent.cost())
                        continue;
                    auto child = SearchNode::make(buf[i], g, h, node->position);
                    if (dest == id)
                        local.stage(std::move(child));
                    else
                        fabric.send(dest, WorkerMessage{std::move(child), id});
                }
            }
            expanded.fetch_add(local_expanded, std::memory_order_relaxed);
        },
        [&] { barrier.cancel(); });

    SearchResult result;
    result.nodes_expanded = expanded.load();
    if (incumbent.found()) {
        result.path = merged_path(grid, frontiers);
        if (!result.path.empty())
            result.cost = static_cast<double>(result.path.size() - 1);
    }
    result.messages = {fabric.sent(), fabric.received(), fabric.queued(), fabric.rerouted()};
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

} // namespace pastar
