#include "pastar/grid.hpp"

#include "pastar/rng.hpp"

#include <fstream>
#include <optional>
#include <queue>
#include <sstream>

namespace pastar {

Grid::Grid(int n, std::vector<Cell> cells, Position start, Position end)
    : n_(n), cells_(std::move(cells)), start_(start), end_(end)
{
    if (n < 1 || cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw GridError(GridError::Code::InvalidSize, "grid cell count does not match side length");
    if (!in_bounds(start) || !in_bounds(end))
        throw GridError(GridError::Code::OutOfBounds, "start or end outside the grid");
    if (cells_[index(start)] != Cell::Start)
        throw GridError(GridError::Code::MissingStart, "start cell is not marked 'S'");
    if (cells_[index(end)] != Cell::End)
        throw GridError(GridError::Code::MissingEnd, "end cell is not marked 'E'");
}

Cell Grid::at(Position p) const
{
    if (!in_bounds(p))
        throw GridError(GridError::Code::OutOfBounds,
                        "position (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                            ") outside " + std::to_string(n_) + "x" + std::to_string(n_) + " grid");
    return cells_[index(p)];
}

int neighbors(const Grid& grid, Position p, Position (&out)[4])
{
    if (!grid.in_bounds(p))
        throw GridError(GridError::Code::OutOfBounds, "neighbors() of an out-of-bounds position");
    const Position candidates[4] = {{p.x, p.y - 1}, {p.x, p.y + 1}, {p.x - 1, p.y}, {p.x + 1, p.y}};
    int count = 0;
    for (const auto& c : candidates) {
        if (grid.in_bounds(c) && grid.cells()[grid.index(c)] != Cell::Wall)
            out[count++] = c;
    }
    return count;
}

std::vector<Position> neighbors(const Grid& grid, Position p)
{
    Position buf[4];
    const int count = neighbors(grid, p, buf);
    return {buf, buf + count};
}

bool connected(const Grid& grid)
{
    std::vector<char> seen(grid.cell_count(), 0);
    std::queue<Position> frontier;
    frontier.push(grid.start());
    seen[grid.index(grid.start())] = 1;
    Position buf[4];
    while (!frontier.empty()) {
        const Position p = frontier.front();
        frontier.pop();
        if (p == grid.end())
            return true;
        const int count = neighbors(grid, p, buf);
        for (int i = 0; i < count; ++i) {
            auto& s = seen[grid.index(buf[i])];
            if (!s) {
                s = 1;
                frontier.push(buf[i]);
            }
        }
    }
    return false;
}

namespace {

Grid generate_attempt(int n, double wall_probability, std::uint64_t stream_seed)
{
    Xoshiro256 rng(stream_seed);
    const auto total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);

    const auto start_index = rng.next_below(total);
    auto end_index = rng.next_below(total - 1);
    if (end_index >= start_index)
        ++end_index;

    std::vector<Cell> cells(total, Cell::Open);
    for (std::uint64_t i = 0; i < total; ++i) {
        if (i == start_index || i == end_index)
            continue;
        if (rng.next_double() < wall_probability)
            cells[i] = Cell::Wall;
    }
    cells[start_index] = Cell::Start;
    cells[end_index] = Cell::End;

    auto to_pos = [n](std::uint64_t i) {
        return Position{static_cast<int>(i % static_cast<std::uint64_t>(n)),
                        static_cast<int>(i / static_cast<std::uint64_t>(n))};
    };
    return Grid(n, std::move(cells), to_pos(start_index), to_pos(end_index));
}

} // namespace

Grid generate(int n, double wall_probability, std::uint64_t seed)
{
    if (n < 2)
        throw GridError(GridError::Code::InvalidSize, "grid side must be at least 2");
    if (!(wall_probability >= 0.0 && wall_probability < 1.0))
        throw GridError(GridError::Code::InvalidWallProbability, "wall probability must lie in [0, 1)");

    for (int attempt = 0; attempt < kMaxGenerateAttempts; ++attempt) {
        Grid grid = generate_attempt(n, wall_probability, seed + static_cast<std::uint64_t>(attempt));
        if (connected(grid))
            return grid;
    }
    throw GridError(GridError::Code::NotConnected,
                    "no connected layout after " + std::to_string(kMaxGenerateAttempts) + " attempts");
}

Grid parse(std::string_view text)
{
    if (!text.empty() && text.back() == '\n')
        text.remove_suffix(1);
    if (text.empty())
        throw GridError(GridError::Code::Empty, "empty grid text");

    std::vector<std::string_view> lines;
    for (std::size_t begin = 0;;) {
        const auto nl = text.find('\n', begin);
        lines.push_back(text.substr(begin, nl == std::string_view::npos ? nl : nl - begin));
        if (nl == std::string_view::npos)
            break;
        begin = nl + 1;
    }

    const std::size_t width = lines.front().size();
    for (std::size_t y = 0; y < lines.size(); ++y) {
        if (lines[y].size() != width)
            throw GridError(GridError::Code::RaggedLines,
                            "line " + std::to_string(y + 1) + " has length " + std::to_string(lines[y].size()) +
                                ", expected " + std::to_string(width));
    }
    if (lines.size() != width)
        throw GridError(GridError::Code::NotSquare,
                        std::to_string(lines.size()) + " lines of width " + std::to_string(width) +
                            " do not form a square grid");

    const int n = static_cast<int>(width);
    std::vector<Cell> cells;
    cells.reserve(width * width);
    std::optional<Position> start;
    std::optional<Position> end;
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            switch (const char c = lines[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]) {
            case '.': cells.push_back(Cell::Open); break;
            case 'W': cells.push_back(Cell::Wall); break;
            case 'S':
                if (start)
                    throw GridError(GridError::Code::DuplicateStart, "more than one 'S'");
                start = Position{x, y};
                cells.push_back(Cell::Start);
                break;
            case 'E':
                if (end)
                    throw GridError(GridError::Code::DuplicateEnd, "more than one 'E'");
                end = Position{x, y};
                cells.push_back(Cell::End);
                break;
            default:
                throw GridError(GridError::Code::IllegalCharacter,
                                std::string("illegal character '") + c + "' at (" + std::to_string(x) + "," +
                                    std::to_string(y) + ")");
            }
        }
    }
    if (!start)
        throw GridError(GridError::Code::MissingStart, "no 'S' in grid");
    if (!end)
        throw GridError(GridError::Code::MissingEnd, "no 'E' in grid");
    return Grid(n, std::move(cells), *start, *end);
}

std::string serialize(const Grid& grid)
{
    const auto n = static_cast<std::size_t>(grid.size());
    std::string out;
    out.reserve(n * (n + 1));
    for (std::size_t i = 0; i < grid.cell_count(); ++i) {
        if (i != 0 && i % n == 0)
            out.push_back('\n');
        switch (grid.cells()[i]) {
        case Cell::Open: out.push_back('.'); break;
        case Cell::Wall: out.push_back('W'); break;
        case Cell::Start: out.push_back('S'); break;
        case Cell::End: out.push_back('E'); break;
        }
    }
    return out;
}

Grid load_grid_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw GridError(GridError::Code::Io, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void save_grid_file(const Grid& grid, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw GridError(GridError::Code::Io, "cannot write " + path);
    out << serialize(grid) << '\n';
    if (!out)
        throw GridError(GridError::Code::Io, "write failed for " + path);
}

} // namespace pastar
