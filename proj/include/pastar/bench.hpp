#pragma once

#include "pastar/dpa_star.hpp"
#include "pastar/grid.hpp"
#include "pastar/heuristics.hpp"
#include "pastar/search.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pastar {

enum class Algorithm { Sequential, Kpbfs, DpaRandom, DpaBlackboard, Hda };
enum class OutputFormat { Csv, Markdown, Json };

std::string_view algorithm_name(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm_name(std::string_view name) noexcept;
std::string_view format_name(OutputFormat f) noexcept;
std::optional<OutputFormat> parse_format_name(std::string_view name) noexcept;

/// Comma-separated legal names, for usage messages.
std::string algorithm_names();
std::string heuristic_names();
std::string format_names();

/// Invalid benchmark configuration (maps to the usage exit code).
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct EngineSettings
{
    std::size_t kpbfs_batch = 1;
    BlackboardStrategy blackboard{};
    std::uint64_t route_seed = 0;
    std::chrono::milliseconds timeout{120000};
};

/// Runs one search with the named engine. Sequential ignores `threads`.
SearchResult run_search(Algorithm algorithm, const Grid& grid, const HeuristicKind& kind, int threads,
                        const EngineSettings& settings = {});

struct BenchConfig
{
    Algorithm algorithm = Algorithm::Sequential;
    HeuristicKind heuristic = HeuristicKind::manhattan();
    std::vector<int> threads{1};
    int n = 100;
    double wall_probability = 0.2;
    std::uint64_t seed = 0;
    int repetitions = 10;
    std::chrono::milliseconds timeout{120000};
    OutputFormat output = OutputFormat::Csv;
    std::optional<Grid> grid; ///< bypasses generation when set
    std::size_t kpbfs_batch = 1;
    BlackboardStrategy blackboard{};
    bool warmup = true;

    /// Throws UsageError on an invalid combination.
    void validate() const;
};

struct BenchRecord
{
    Algorithm algorithm = Algorithm::Sequential;
    HeuristicVariant heuristic = HeuristicVariant::Manhattan;
    int threads = 1;
    int n = 0;
    std::uint64_t seed = 0;
    int repetitions = 0;
    double mean_s = 0.0; ///< over completed runs; NaN if every run hung
    double min_s = 0.0;
    double max_s = 0.0;
    double mean_expanded = 0.0;
    std::optional<double> cost;        ///< worst cost over completed runs
    std::optional<double> oracle_cost;
    bool optimal = false;      ///< every completed run matched the oracle
    bool valid_paths = false;  ///< every completed run returned a valid path
    int hangs = 0;
    bool admissible = true;
};

/// One record per thread count, in the order given. Runs are serialized.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr std::string_view kCsvHeader =
    "algorithm,heuristic,threads,n,seed,reps,mean_s,min_s,max_s,mean_expanded,cost,oracle_cost,optimal,hangs";

std::string emit(const std::vector<BenchRecord>& records, OutputFormat format);

struct CorpusEntry
{
    std::string file;
    int n = 0;
    std::uint64_t seed = 0;
    double oracle_cost = 0.0;
};

struct Manifest
{
    std::vector<CorpusEntry> entries;
};

inline constexpr std::string_view kManifestName = "manifest.csv";

/// Writes `count` grids per size (seeds seed, seed+1, ... across the whole
/// corpus) plus manifest.csv with each grid's oracle cost.
Manifest gen_corpus(const std::vector<int>& sizes, int count, std::uint64_t seed,
                    const std::filesystem::path& directory, double wall_probability = 0.2);

} // namespace pastar
