#pragma once

#include "pastar/search.hpp"

#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <unordered_map>
#include <vector>

namespace pastar {

/// One worker's private OPEN, CLOSED and receive BUFFER for the
/// decentralized engines. Never shared between threads.
class LocalFrontier
{
public:
    struct Record
    {
        double g;
        std::uint32_t parent;
    };

    explicit LocalFrontier(const Grid& grid) : grid_(&grid) {}

    /// Inserts into OPEN unless CLOSED already holds p with g' <= node.g.
    bool admit(const SearchNode& node);

    /// Like admit(), but also accepts a node whose g equals the recorded one.
    /// For nodes coming back from a shared pool: the donor's own CLOSED entry
    /// has the same g and would otherwise swallow them.
    bool admit_transferred(const SearchNode& node);

    void stage(SearchNode node) { buffer_.push_back(std::move(node)); }

    /// Admits everything staged. Returns how many survived the CLOSED check.
    std::size_t flush_buffer();

    /// Best non-stale node with f < bound; stale or pruned tops are discarded.
    std::optional<SearchNode> pop_best(double bound);

    /// f of the best live OPEN entry (after discarding stale/pruned tops), or +inf.
    double min_f(double bound);

    /// Removes up to k best live entries (used for blackboard donation).
    std::vector<SearchNode> take_best(std::size_t k, double bound);

    /// Would a node at p with cost g be discarded by admit()?
    bool dominated(Position p, double g) const;

    const Record* lookup(Position p) const;

    bool open_empty() const noexcept { return open_.empty(); }
    std::size_t open_size() const noexcept { return open_.size(); }
    std::size_t buffer_size() const noexcept { return buffer_.size(); }
    std::size_t closed_size() const noexcept { return closed_.size(); }
    void clear_open() { open_ = {}; }

private:
    bool stale(const SearchNode& node) const;
    void discard_dead_tops(double bound);

    const Grid* grid_;
    std::priority_queue<SearchNode, std::vector<SearchNode>, NodeOrder> open_;
    std::unordered_map<std::uint32_t, Record> closed_;
    std::vector<SearchNode> buffer_;
};

/// Rebuilds the START-to-END path by following, at every cell, the record
/// with the smallest g across all workers' CLOSED lists.
std::vector<Position> merged_path(const Grid& grid, std::span<const LocalFrontier> frontiers);

} // namespace pastar
