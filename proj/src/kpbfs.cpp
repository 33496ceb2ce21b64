#include "pastar/kpbfs.hpp"

namespace pastar {

SharedFrontier::SharedFrontier(const Grid& grid)
    : grid_(grid), best_g_(grid.cell_count(), kInfinity), parent_(grid.cell_count(), kNoParent)
{
}

void SharedFrontier::push(SearchNode node)
{
    {
        std::lock_guard lock(open_mutex_);
        open_.push(std::move(node));
        ++pushes_;
    }
    open_cv_.notify_one();
}

void SharedFrontier::push_all(std::vector<SearchNode>& nodes)
{
    if (nodes.empty())
        return;
    {
        std::lock_guard lock(open_mutex_);
        for (auto& n : nodes)
            open_.push(std::move(n));
        pushes_ += nodes.size();
    }
    nodes.clear();
    open_cv_.notify_all();
}

bool SharedFrontier::try_record(Position p, double g, std::optional<Position> parent)
{
    const auto idx = grid_.index(p);
    std::lock_guard lock(closed_mutex_);
    if (g >= best_g_[idx])
        return false;
    best_g_[idx] = g;
    parent_[idx] = parent ? grid_.index(*parent) : kNoParent;
    return true;
}

double SharedFrontier::best_g(Position p) const
{
    std::lock_guard lock(closed_mutex_);
    return best_g_[grid_.index(p)];
}

std::vector<SearchNode> SharedFrontier::pop_locked(std::size_t k, double bound)
{
    std::vector<SearchNode> batch;
    std::lock_guard closed_lock(closed_mutex_);
    while (batch.size() < k && !open_.empty()) {
        SearchNode node = open_.top();
        open_.pop();
        ++pops_;
        if (node.g > best_g_[grid_.index(node.position)] || node.f >= bound)
            continue;
        batch.push_back(std::move(node));
    }
    return batch;
}

std::vector<SearchNode> SharedFrontier::expand_batch(std::size_t k, double bound)
{
    std::lock_guard lock(open_mutex_);
    return pop_locked(k, bound);
}

std::vector<SearchNode> SharedFrontier::acquire(std::size_t k, const Incumbent& incumbent,
                                                const std::atomic<bool>& abort)
{
    std::unique_lock lock(open_mutex_);
    for (;;) {
        if (exhausted_ || abort.load(std::memory_order_acquire))
            return {};
        auto batch = pop_locked(k, incumbent.cost());
        if (!batch.empty()) {
            ++in_flight_;
            return batch;
        }
        if (open_.empty() && in_flight_ == 0) {
            exhausted_ = true;
            open_cv_.notify_all();
            return {};
        }
        open_cv_.wait_for(lock, std::chrono::milliseconds(5));
    }
}

void SharedFrontier::finish(std::vector<SearchNode>& successors)
{
    {
        std::lock_guard lock(open_mutex_);
        for (auto& n : successors)
            open_.push(std::move(n));
        pushes_ += successors.size();
        --in_flight_;
    }
    successors.clear();
    open_cv_.notify_all();
}

std::size_t SharedFrontier::open_size() const
{
    std::lock_guard lock(open_mutex_);
    return open_.size();
}

std::uint64_t SharedFrontier::pushes() const
{
    std::lock_guard lock(open_mutex_);
    return pushes_;
}

std::uint64_t SharedFrontier::pops() const
{
    std::lock_guard lock(open_mutex_);
    return pops_;
}

std::vector<Position> SharedFrontier::path_to_end() const
{
    std::lock_guard lock(closed_mutex_);
    if (best_g_[grid_.index(grid_.end())] == kInfinity)
        return {};
    return reconstruct_path(grid_, [&](std::uint32_t i) { return parent_[i]; });
}

SearchResult kpbfs_search(const Grid& grid, const HeuristicKind& kind, const KpbfsOptions& options)
{
    if (options.threads < 1)
        throw std::invalid_argument("kpbfs needs at least one thread");
    if (options.batch < 1)
        throw std::invalid_argument("kpbfs batch must be at least 1");

    const auto t0 = std::chrono::steady_clock::now();
    const Position goal = grid.end();

    SharedFrontier frontier(grid);
    Incumbent incumbent;
    std::atomic<bool> abort{false};
    std::atomic<std::uint64_t> expanded{0};

    frontier.try_record(grid.start(), 0.0, std::nullopt);
    frontier.push(SearchNode::make(grid.start(), 0.0, evaluate(kind, grid.start(), goal)));

    run_workers(
        options.threads, options.timeout, abort,
        [&](WorkerId id) {
            std::vector<SearchNode> successors;
            Position buf[4];
            std::uint64_t local_expanded = 0;
            for (;;) {
                auto batch = frontier.acquire(options.batch, incumbent, abort);
                if (batch.empty())
                    break;
                for (const auto& node : batch) {
                    ++local_expanded;
                    if (node.position == goal) {
                        incumbent.try_improve(node.g, id);
                        continue;
                    }
                    const int count = neighbors(grid, node.position, buf);
                    for (int i = 0; i < count; ++i) {
                        const double g = node.g + 1.0;
                        if (g >= frontier.best_g(buf[i]))
                            continue;
                        const double h = evaluate(kind, buf[i], goal);
                        if (g + h >= incumbent.cost())
                            continue;
                        if (frontier.try_record(buf[i], g, node.position))
                            successors.push_back(SearchNode::make(buf[i], g, h, node.position));
                    }
                }
                frontier.finish(successors);
            }
            expanded.fetch_add(local_expanded, std::memory_order_relaxed);
        },
        [] {});

    SearchResult result;
    result.nodes_expanded = expanded.load();
    if (incumbent.found()) {
        result.path = frontier.path_to_end();
        if (!result.path.empty())
            result.cost = static_cast<double>(result.path.size() - 1);
    }
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

} // namespace pastar
