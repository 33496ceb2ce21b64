#include "pastar/hda_star.hpp"

#include "pastar/local_frontier.hpp"
#include "pastar/rng.hpp"
#include "termination.hpp"

#include <stdexcept>

namespace pastar {

OwnerHash::OwnerHash(int thread_count) : threads_(thread_count)
{
    if (thread_count < 1)
        throw std::invalid_argument("owner hash needs at least one thread");
}

WorkerId OwnerHash::owner(Position p) const noexcept
{
    const std::uint64_t key = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) * kMultiplierX +
                              static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y)) * kMultiplierY;
    return static_cast<WorkerId>(mix64(key) % static_cast<std::uint64_t>(threads_));
}

HdaWorker::HdaWorker(WorkerId id, const Grid& grid, const HeuristicKind& kind, const OwnerHash& hash,
                     MessageFabric& fabric, Incumbent& incumbent, LocalFrontier& local)
    : id_(id), grid_(grid), kind_(kind), hash_(hash), fabric_(fabric), incumbent_(incumbent), local_(local)
{
}

HdaWorker::Step HdaWorker::step()
{
    inbound_.clear();
    if (fabric_.drain(id_, inbound_) > 0) {
        const double bound = incumbent_.cost();
        for (const auto& m : inbound_) {
            if (m.node.f >= bound)
                continue;
            if (local_.admit(m.node) && hash_.owner(m.node.position) != id_)
                ++foreign_;
        }
        return Step::Drained;
    }

    const auto node = local_.pop_best(incumbent_.cost());
    if (!node)
        return Step::Idle;

    ++expanded_;
    detail::pace(expanded_);
    const Position goal = grid_.end();
    if (node->position == goal) {
        incumbent_.try_improve(node->g, id_);
        return Step::Expanded;
    }
    Position buf[4];
    const int count = neighbors(grid_, node->position, buf);
    for (int i = 0; i < count; ++i) {
        const double g = node->g + 1.0;
        const WorkerId dest = hash_.owner(buf[i]);
        if (dest == id_ && local_.dominated(buf[i], g))
            continue;
        const double h = evaluate(kind_, buf[i], goal);
        if (g + h >= incumbent_.cost())
            continue;
        auto child = SearchNode::make(buf[i], g, h, node->position);
        if (dest == id_)
            local_.admit(child);
        else
            fabric_.send(dest, WorkerMessage{std::move(child), id_});
    }
    return Step::Expanded;
}

HdaReport hda_search_report(const Grid& grid, const HeuristicKind& kind, const HdaOptions& options)
{
    const int threads = options.threads;
    if (threads < 1)
        throw std::invalid_argument("hda needs at least one thread");

    const auto t0 = std::chrono::steady_clock::now();
    const OwnerHash hash(threads);

    std::vector<LocalFrontier> frontiers(static_cast<std::size_t>(threads), LocalFrontier(grid));
    MessageFabric fabric(threads);
    DynamicBarrier barrier(threads);
    Incumbent incumbent;
    std::atomic<bool> abort{false};
    std::atomic<std::uint64_t> expanded{0};
    std::atomic<std::uint64_t> foreign{0};

    for (WorkerId id = 0; id < threads; ++id)
        fabric.report_busy(id);
    frontiers[static_cast<std::size_t>(hash.owner(grid.start()))].admit(
        SearchNode::make(grid.start(), 0.0, evaluate(kind, grid.start(), grid.end())));

    run_workers(
        threads, options.timeout, abort,
        [&](WorkerId id) {
            detail::WorkerExitGuard guard(id, fabric, barrier);
            HdaWorker worker(id, grid, kind, hash, fabric, incumbent, frontiers[static_cast<std::size_t>(id)]);
            while (!abort.load(std::memory_order_acquire)) {
                if (worker.step() != HdaWorker::Step::Idle)
                    continue;
                if (detail::settle_idle(id, fabric, barrier, incumbent, true) == detail::IdleOutcome::Exit)
                    break;
            }
            expanded.fetch_add(worker.expanded(), std::memory_order_relaxed);
            foreign.fetch_add(worker.foreign_admissions(), std::memory_order_relaxed);
        },
        [&] { barrier.cancel(); });

    HdaReport report;
    auto& result = report.result;
    result.nodes_expanded = expanded.load();
    if (incumbent.found()) {
        result.path = merged_path(grid, frontiers);
        if (!result.path.empty())
            result.cost = static_cast<double>(result.path.size() - 1);
    }
    result.messages = {fabric.sent(), fabric.received(), fabric.queued(), fabric.rerouted()};
    result.elapsed = std::chrono::steady_clock::now() - t0;
    report.foreign_admissions = foreign.load();
    return report;
}

} // namespace pastar
