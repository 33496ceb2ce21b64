#pragma once

// Reference implementations used only by tests. Deliberately naive and
// independent of the library's search code.

#include "pastar/grid.hpp"

#include <deque>
#include <vector>

namespace pastar::oracle {

/// All-pairs-free BFS distance table from `source`; -1 marks unreachable or wall.
inline std::vector<int> bfs_distances(const Grid& grid, Position source)
{
    const int n = grid.size();
    std::vector<int> dist(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    auto passable = [&](int x, int y) {
        return x >= 0 && y >= 0 && x < n && y < n &&
               grid.cells()[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)] !=
                   Cell::Wall;
    };
    auto at = [&](int x, int y) -> int& {
        return dist[static_cast<std::size_t>(y) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x)];
    };
    if (!passable(source.x, source.y))
        return dist;
    std::deque<Position> queue{source};
    at(source.x, source.y) = 0;
    const int dx[4] = {0, 0, -1, 1};
    const int dy[4] = {-1, 1, 0, 0};
    while (!queue.empty()) {
        const Position p = queue.front();
        queue.pop_front();
        for (int k = 0; k < 4; ++k) {
            const int x = p.x + dx[k];
            const int y = p.y + dy[k];
            if (passable(x, y) && at(x, y) < 0) {
                at(x, y) = at(p.x, p.y) + 1;
                queue.push_back({x, y});
            }
        }
    }
    return dist;
}

/// Shortest START-to-END move count, or -1.
inline int bfs_cost(const Grid& grid)
{
    const auto d = bfs_distances(grid, grid.start());
    return d[grid.index(grid.end())];
}

} // namespace pastar::oracle
