#include "pastar/grid.hpp"

#include "test_oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace pastar;

namespace {

GridError::Code parse_error(std::string_view text)
{
    try {
        (void)parse(text);
    } catch (const GridError& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected a parse error for:\n" << text;
    return GridError::Code::Io;
}

} // namespace

TEST(GridGenerate, SmallestOpenGrid)
{
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 0xFFFFFFFFFFFFFFFFULL}) {
        const Grid g = generate(2, 0.0, seed);
        EXPECT_EQ(g.size(), 2);
        EXPECT_NE(g.start(), g.end());
        EXPECT_EQ(std::count(g.cells().begin(), g.cells().end(), Cell::Wall), 0);
        EXPECT_TRUE(connected(g));
    }
}

TEST(GridGenerate, Deterministic)
{
    EXPECT_EQ(generate(10, 0.2, 42), generate(10, 0.2, 42));
    EXPECT_EQ(serialize(generate(10, 0.2, 42)), serialize(generate(10, 0.2, 42)));
    EXPECT_NE(serialize(generate(10, 0.2, 42)), serialize(generate(10, 0.2, 43)));
}

TEST(GridGenerate, ConnectedAccordingToBfsOracle)
{
    const Grid g = generate(100, 0.2, 7);
    EXPECT_GE(oracle::bfs_cost(g), 1);
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        EXPECT_GE(oracle::bfs_cost(generate(30, 0.3, seed)), 1) << "seed " << seed;
}

TEST(GridGenerate, WallFractionNearRequestedProbability)
{
    const Grid g = generate(300, 0.2, 11);
    const auto walls = std::count(g.cells().begin(), g.cells().end(), Cell::Wall);
    const double fraction = static_cast<double>(walls) / static_cast<double>(g.cell_count() - 2);
    EXPECT_NEAR(fraction, 0.2, 0.01);
}

TEST(GridGenerate, RejectsBadArguments)
{
    EXPECT_THROW(generate(1, 0.2, 0), GridError);
    EXPECT_THROW(generate(0, 0.2, 0), GridError);
    EXPECT_THROW(generate(10, 1.0, 0), GridError);
    EXPECT_THROW(generate(10, -0.1, 0), GridError);
    try {
        (void)generate(1, 0.2, 0);
    } catch (const GridError& e) {
        EXPECT_EQ(e.code(), GridError::Code::InvalidSize);
    }
    try {
        (void)generate(5, 1.5, 0);
    } catch (const GridError& e) {
        EXPECT_EQ(e.code(), GridError::Code::InvalidWallProbability);
    }
}

TEST(GridGenerate, GivesUpOnImpossibleDensity)
{
    try {
        (void)generate(40, 0.95, 3);
        FAIL() << "expected NotConnected";
    } catch (const GridError& e) {
        EXPECT_EQ(e.code(), GridError::Code::NotConnected);
    }
}

TEST(GridParse, SmallestLegalGrid)
{
    const Grid g = parse("S.\n.E");
    EXPECT_EQ(g.size(), 2);
    EXPECT_EQ(g.start(), (Position{0, 0}));
    EXPECT_EQ(g.end(), (Position{1, 1}));
}

TEST(GridParse, CharacterPositionMapping)
{
    const Grid g = parse("S.W\n.W.\n..E");
    EXPECT_EQ(g.size(), 3);
    std::vector<Position> walls;
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x)
            if (g.is_wall({x, y}))
                walls.push_back({x, y});
    EXPECT_EQ(walls, (std::vector<Position>{{2, 0}, {1, 1}}));
    EXPECT_EQ(g.end(), (Position{2, 2}));
}

TEST(GridParse, AcceptsTrailingNewline)
{
    EXPECT_EQ(parse("S.\n.E\n"), parse("S.\n.E"));
}

TEST(GridParse, DistinctErrors)
{
    EXPECT_EQ(parse_error("SE\nEE"), GridError::Code::DuplicateEnd);
    EXPECT_EQ(parse_error("SS\n.E"), GridError::Code::DuplicateStart);
    EXPECT_EQ(parse_error("..\n.E"), GridError::Code::MissingStart);
    EXPECT_EQ(parse_error("S.\n.."), GridError::Code::MissingEnd);
    EXPECT_EQ(parse_error("S..\n.E"), GridError::Code::RaggedLines);
    EXPECT_EQ(parse_error("S.\n.E\n..\n"), GridError::Code::NotSquare);
    EXPECT_EQ(parse_error("S.\n.X"), GridError::Code::IllegalCharacter);
    EXPECT_EQ(parse_error("S.\n.E "), GridError::Code::RaggedLines);
    EXPECT_EQ(parse_error(""), GridError::Code::Empty);
}

TEST(GridSerialize, InverseOfParse)
{
    EXPECT_EQ(serialize(parse("S.\n.E")), "S.\n.E");
    const std::string text = "S.W\n.W.\n..E";
    EXPECT_EQ(serialize(parse(serialize(parse(text)))), serialize(parse(text)));
}

TEST(GridSerialize, RoundTripOverSeeds)
{
    EXPECT_EQ(parse(serialize(generate(10, 0.2, 42))), generate(10, 0.2, 42));
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 2 + static_cast<int>(seed % 25);
        const Grid g = generate(n, 0.25, seed);
        ASSERT_EQ(parse(serialize(g)), g) << "seed " << seed;
    }
}

TEST(GridFile, SaveAndLoad)
{
    const auto path = std::filesystem::temp_directory_path() / "pastar_grid_test.grid";
    const Grid g = generate(12, 0.2, 5);
    save_grid_file(g, path.string());
    EXPECT_EQ(load_grid_file(path.string()), g);
    std::ifstream in(path);
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(contents.back(), '\n');
    EXPECT_EQ(contents.find(' '), std::string::npos);
    std::filesystem::remove(path);
    EXPECT_THROW(load_grid_file(path.string()), GridError);
}

TEST(GridNeighbors, InteriorAndCorner)
{
    const Grid open = parse("S..\n...\n..E");
    EXPECT_EQ(neighbors(open, {1, 1}), (std::vector<Position>{{1, 0}, {1, 2}, {0, 1}, {2, 1}}));
    EXPECT_EQ(neighbors(open, {0, 0}), (std::vector<Position>{{0, 1}, {1, 0}}));
}

TEST(GridNeighbors, SkipsWalls)
{
    const Grid g = parse("S.W\n.W.\n..E");
    EXPECT_EQ(neighbors(g, {0, 1}), (std::vector<Position>{{0, 0}, {0, 2}}));
}

TEST(GridNeighbors, RejectsOutOfBounds)
{
    const Grid g = parse("S.\n.E");
    EXPECT_THROW(neighbors(g, {2, 0}), GridError);
    EXPECT_THROW(neighbors(g, {0, -1}), GridError);
}

TEST(GridNeighbors, NeverWallOrOutOfBounds)
{
    const Grid g = generate(40, 0.3, 17);
    for (int y = 0; y < g.size(); ++y) {
        for (int x = 0; x < g.size(); ++x) {
            const auto ns = neighbors(g, {x, y});
            ASSERT_LE(ns.size(), 4U);
            for (const auto& p : ns) {
                ASSERT_TRUE(g.in_bounds(p));
                ASSERT_FALSE(g.is_wall(p));
                ASSERT_EQ(std::abs(p.x - x) + std::abs(p.y - y), 1);
            }
        }
    }
}
