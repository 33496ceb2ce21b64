#include "pastar/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace pastar {

std::vector<Position> reconstruct_path(const Grid& grid,
                                       const std::function<std::uint32_t(std::uint32_t)>& parent_of)
{
    std::vector<Position> path;
    std::uint32_t at = grid.index(grid.end());
    const std::uint32_t start = grid.index(grid.start());
    for (std::size_t guard = 0; guard <= grid.cell_count(); ++guard) {
        path.push_back(grid.position(at));
        if (at == start) {
            std::reverse(path.begin(), path.end());
            return path;
        }
        at = parent_of(at);
        if (at == kNoParent)
            break;
    }
    return {};
}

SearchResult astar_sequential(const Grid& grid, const HeuristicKind& kind)
{
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult result;

    std::vector<double> best_g(grid.cell_count(), kInfinity);
    std::vector<std::uint32_t> parent(grid.cell_count(), kNoParent);
    std::priority_queue<SearchNode, std::vector<SearchNode>, NodeOrder> open;

    const Position goal = grid.end();
    best_g[grid.index(grid.start())] = 0.0;
    open.push(SearchNode::make(grid.start(), 0.0, evaluate(kind, grid.start(), goal)));

    Position buf[4];
    while (!open.empty()) {
        const SearchNode node = open.top();
        open.pop();
        const auto idx = grid.index(node.position);
        if (node.g > best_g[idx])
            continue;
        ++result.nodes_expanded;
        if (node.position == goal) {
            result.cost = node.g;
            break;
        }
        const int count = neighbors(grid, node.position, buf);
        for (int i = 0; i < count; ++i) {
            const double g = node.g + 1.0;
            const auto nidx = grid.index(buf[i]);
            if (g >= best_g[nidx])
                continue;
            best_g[nidx] = g;
            parent[nidx] = idx;
            open.push(SearchNode::make(buf[i], g, evaluate(kind, buf[i], goal), node.position));
        }
    }

    if (result.cost)
        result.path = reconstruct_path(grid, [&](std::uint32_t i) { return parent[i]; });
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

SearchResult dijkstra_oracle(const Grid& grid)
{
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult result;

    constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(grid.cell_count(), kUnseen);
    std::vector<std::uint32_t> parent(grid.cell_count(), kNoParent);
    using Entry = std::pair<std::uint32_t, std::uint32_t>; // (distance, cell index)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

    const auto start = grid.index(grid.start());
    const auto goal = grid.index(grid.end());
    dist[start] = 0;
    open.emplace(0, start);

    Position buf[4];
    while (!open.empty()) {
        const auto [d, idx] = open.top();
        open.pop();
        if (d > dist[idx])
            continue;
        ++result.nodes_expanded;
        if (idx == goal) {
            result.cost = static_cast<double>(d);
            break;
        }
        const int count = neighbors(grid, grid.position(idx), buf);
        for (int i = 0; i < count; ++i) {
            const auto nidx = grid.index(buf[i]);
            if (d + 1 < dist[nidx]) {
                dist[nidx] = d + 1;
                parent[nidx] = idx;
                open.emplace(d + 1, nidx);
            }
        }
    }

    if (result.cost)
        result.path = reconstruct_path(grid, [&](std::uint32_t i) { return parent[i]; });
    result.elapsed = std::chrono::steady_clock::now() - t0;
    return result;
}

bool validate_path(const Grid& grid, const SearchResult& result)
{
    if (!result.cost)
        return result.path.empty() && !connected(grid);

    const auto& path = result.path;
    if (path.empty() || path.front() != grid.start() || path.back() != grid.end())
        return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!grid.in_bounds(path[i]) || grid.cells()[grid.index(path[i])] == Cell::Wall)
            return false;
        if (i > 0 && std::abs(path[i].x - path[i - 1].x) + std::abs(path[i].y - path[i - 1].y) != 1)
            return false;
    }
    return *result.cost == static_cast<double>(path.size() - 1);
}

} // namespace pastar
