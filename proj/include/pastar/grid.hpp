#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pastar {

struct Position
{
    int x = 0; ///< column
    int y = 0; ///< row

    friend constexpr bool operator==(Position, Position) = default;
    friend constexpr auto operator<=>(Position, Position) = default;
};

enum class Cell : std::uint8_t { Open, Wall, Start, End };

class GridError : public std::runtime_error
{
public:
    enum class Code {
        InvalidSize,
        InvalidWallProbability,
        NotConnected,
        Empty,
        RaggedLines,
        NotSquare,
        IllegalCharacter,
        MissingStart,
        DuplicateStart,
        MissingEnd,
        DuplicateEnd,
        OutOfBounds,
        Io,
    };

    GridError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

/// Square grid world. Immutable once built; share freely across threads.
class Grid
{
public:
    Grid(int n, std::vector<Cell> cells, Position start, Position end);

    int size() const noexcept { return n_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }
    Position start() const noexcept { return start_; }
    Position end() const noexcept { return end_; }

    bool in_bounds(Position p) const noexcept
    {
        return p.x >= 0 && p.y >= 0 && p.x < n_ && p.y < n_;
    }

    Cell at(Position p) const;
    bool is_wall(Position p) const { return at(p) == Cell::Wall; }

    /// Row-major index, y * n + x.
    std::uint32_t index(Position p) const noexcept
    {
        return static_cast<std::uint32_t>(p.y) * static_cast<std::uint32_t>(n_) +
               static_cast<std::uint32_t>(p.x);
    }
    Position position(std::uint32_t index) const noexcept
    {
        return {static_cast<int>(index % static_cast<std::uint32_t>(n_)),
                static_cast<int>(index / static_cast<std::uint32_t>(n_))};
    }

    const std::vector<Cell>& cells() const noexcept { return cells_; }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    int n_;
    std::vector<Cell> cells_;
    Position start_;
    Position end_;
};

/// Attempts made by generate() before giving up on a connected layout.
inline constexpr int kMaxGenerateAttempts = 1000;

/// Deterministic random grid. Start and end are drawn first, then every other
/// cell becomes a wall with probability wall_probability. Layouts without a
/// start-to-end path are rejected and redrawn from the next seed substream.
Grid generate(int n, double wall_probability, std::uint64_t seed);

/// Parses the '.', 'S', 'E', 'W' text format. A trailing newline is accepted.
Grid parse(std::string_view text);

/// Rows joined with '\n', without a trailing newline.
std::string serialize(const Grid& grid);

/// Reads and writes .grid files (rows newline-terminated).
Grid load_grid_file(const std::string& path);
void save_grid_file(const Grid& grid, const std::string& path);

/// Up to four passable cardinal neighbours, in the order up, down, left, right.
/// Every move costs 1.
std::vector<Position> neighbors(const Grid& grid, Position p);

/// Allocation-free variant; returns the number written to out.
int neighbors(const Grid& grid, Position p, Position (&out)[4]);

/// Breadth-first reachability from start to end.
bool connected(const Grid& grid);

} // namespace pastar
