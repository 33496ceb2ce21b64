#include "pastar/local_frontier.hpp"

namespace pastar {

bool LocalFrontier::dominated(Position p, double g) const
{
    const auto it = closed_.find(grid_->index(p));
    return it != closed_.end() && it->second.g <= g;
}

bool LocalFrontier::admit(const SearchNode& node)
{
    const auto idx = grid_->index(node.position);
    const auto parent = node.parent ? grid_->index(*node.parent) : kNoParent;
    auto [it, inserted] = closed_.try_emplace(idx, Record{node.g, parent});
    if (!inserted) {
        if (it->second.g <= node.g)
            return false;
        it->second = Record{node.g, parent};
    }
    open_.push(node);
    return true;
}

bool LocalFrontier::admit_transferred(const SearchNode& node)
{
    const auto idx = grid_->index(node.position);
    const auto parent = node.parent ? grid_->index(*node.parent) : kNoParent;
    auto [it, inserted] = closed_.try_emplace(idx, Record{node.g, parent});
    if (!inserted) {
        if (it->second.g < node.g)
            return false;
        if (node.g < it->second.g)
            it->second = Record{node.g, parent};
    }
    open_.push(node);
    return true;
}

std::size_t LocalFrontier::flush_buffer()
{
    std::size_t admitted = 0;
    for (const auto& node : buffer_)
        admitted += admit(node) ? 1 : 0;
    buffer_.clear();
    return admitted;
}

bool LocalFrontier::stale(const SearchNode& node) const
{
    const auto it = closed_.find(grid_->index(node.position));
    return it != closed_.end() && node.g > it->second.g;
}

void LocalFrontier::discard_dead_tops(double bound)
{
    while (!open_.empty() && (open_.top().f >= bound || stale(open_.top())))
        open_.pop();
}

std::optional<SearchNode> LocalFrontier::pop_best(double bound)
{
    discard_dead_tops(bound);
    if (open_.empty())
        return std::nullopt;
    SearchNode node = open_.top();
    open_.pop();
    return node;
}

double LocalFrontier::min_f(double bound)
{
    discard_dead_tops(bound);
    return open_.empty() ? kInfinity : open_.top().f;
}

std::vector<SearchNode> LocalFrontier::take_best(std::size_t k, double bound)
{
    std::vector<SearchNode> out;
    while (out.size() < k) {
        auto node = pop_best(bound);
        if (!node)
            break;
        out.push_back(std::move(*node));
    }
    return out;
}

const LocalFrontier::Record* LocalFrontier::lookup(Position p) const
{
    const auto it = closed_.find(grid_->index(p));
    return it == closed_.end() ? nullptr : &it->second;
}

std::vector<Position> merged_path(const Grid& grid, std::span<const LocalFrontier> frontiers)
{
    return reconstruct_path(grid, [&](std::uint32_t idx) {
        const Position p = grid.position(idx);
        const LocalFrontier::Record* best = nullptr;
        for (const auto& f : frontiers) {
            const auto* r = f.lookup(p);
            if (r && (!best || r->g < best->g))
                best = r;
        }
        return best ? best->parent : kNoParent;
    });
}

} // namespace pastar
