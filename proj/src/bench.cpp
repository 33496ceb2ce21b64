#include "pastar/bench.hpp"

#include "pastar/hda_star.hpp"
#include "pastar/kpbfs.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace pastar {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 5> kAlgorithms{{
    {Algorithm::Sequential, "sequential"},
    {Algorithm::Kpbfs, "kpbfs"},
    {Algorithm::DpaRandom, "dpa-random"},
    {Algorithm::DpaBlackboard, "dpa-blackboard"},
    {Algorithm::Hda, "hda"},
}};

constexpr std::array<std::pair<OutputFormat, std::string_view>, 3> kFormats{{
    {OutputFormat::Csv, "csv"},
    {OutputFormat::Markdown, "markdown"},
    {OutputFormat::Json, "json"},
}};

template <typename Table>
std::string join_names(const Table& table)
{
    std::string out;
    for (const auto& [value, name] : table) {
        if (!out.empty())
            out += ", ";
        out += name;
    }
    return out;
}

std::string fmt_double(double v, const char* spec)
{
    if (std::isnan(v))
        return {};
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_cost(const std::optional<double>& c)
{
    return c ? fmt_double(*c, "%.0f") : std::string("unreachable");
}

} // namespace

std::string_view algorithm_name(Algorithm a) noexcept
{
    for (const auto& [v, name] : kAlgorithms)
        if (v == a)
            return name;
    return "unknown";
}

std::optional<Algorithm> parse_algorithm_name(std::string_view name) noexcept
{
    for (const auto& [v, n] : kAlgorithms)
        if (n == name)
            return v;
    return std::nullopt;
}

std::string_view format_name(OutputFormat f) noexcept
{
    for (const auto& [v, name] : kFormats)
        if (v == f)
            return name;
    return "unknown";
}

std::optional<OutputFormat> parse_format_name(std::string_view name) noexcept
{
    for (const auto& [v, n] : kFormats)
        if (n == name)
            return v;
    return std::nullopt;
}

std::string algorithm_names() { return join_names(kAlgorithms); }
std::string format_names() { return join_names(kFormats); }

std::string heuristic_names()
{
    std::string out;
    for (auto v : {HeuristicVariant::Euclidean, HeuristicVariant::Manhattan, HeuristicVariant::Inadmissible,
                   HeuristicVariant::Expensive, HeuristicVariant::ExpensiveInadmissible}) {
        if (!out.empty())
            out += ", ";
        out += heuristic_name(v);
    }
    return out;
}

SearchResult run_search(Algorithm algorithm, const Grid& grid, const HeuristicKind& kind, int threads,
                        const EngineSettings& settings)
{
    switch (algorithm) {
    case Algorithm::Sequential:
        return astar_sequential(grid, kind);
    case Algorithm::Kpbfs:
        return kpbfs_search(grid, kind, KpbfsOptions{threads, settings.kpbfs_batch, settings.timeout});
    case Algorithm::DpaRandom:
        return dpa_search(grid, kind, DpaOptions{threads, RandomStrategy{settings.route_seed}, settings.timeout});
    case Algorithm::DpaBlackboard:
        return dpa_search(grid, kind, DpaOptions{threads, settings.blackboard, settings.timeout});
    case Algorithm::Hda:
        return hda_search(grid, kind, HdaOptions{threads, settings.timeout});
    }
    throw UsageError("unknown algorithm");
}

void BenchConfig::validate() const
{
    if (repetitions < 1)
        throw UsageError("--reps must be at least 1");
    if (threads.empty())
        throw UsageError("--threads must list at least one thread count");
    for (int t : threads)
        if (t < 1)
            throw UsageError("thread counts must be positive");
    if (timeout.count() <= 0)
        throw UsageError("--timeout-secs must be positive");
    if (!grid && n < 2)
        throw UsageError("--size must be at least 2");
    if (!grid && !(wall_probability >= 0.0 && wall_probability < 1.0))
        throw UsageError("--wall-prob must lie in [0, 1)");
    if (kpbfs_batch < 1)
        throw UsageError("--batch must be at least 1");
    if (!(blackboard.threshold > 0.0) || blackboard.batch < 1)
        throw UsageError("--bb-threshold must be > 0 and --bb-batch >= 1");
    try {
        heuristic.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<BenchRecord> run_bench(const BenchConfig& config)
{
    config.validate();
    const Grid grid = config.grid ? *config.grid : generate(config.n, config.wall_probability, config.seed);
    const SearchResult oracle = dijkstra_oracle(grid);

    EngineSettings settings;
    settings.kpbfs_batch = config.kpbfs_batch;
    settings.blackboard = config.blackboard;
    settings.route_seed = config.seed;
    settings.timeout = config.timeout;

    std::vector<BenchRecord> records;
    for (int threads : config.threads) {
        BenchRecord rec;
        rec.algorithm = config.algorithm;
        rec.heuristic = config.heuristic.variant;
        rec.threads = threads;
        rec.n = grid.size();
        rec.seed = config.seed;
        rec.repetitions = config.repetitions;
        rec.oracle_cost = oracle.cost;
        rec.admissible = is_admissible(config.heuristic);

        if (config.warmup) {
            try {
                (void)run_search(config.algorithm, grid, config.heuristic, threads, settings);
            } catch (const SearchHang&) {
            }
        }

        double total_s = 0.0;
        double total_expanded = 0.0;
        double min_s = std::numeric_limits<double>::infinity();
        double max_s = 0.0;
        int completed = 0;
        bool optimal = true;
        bool valid = true;
        for (int rep = 0; rep < config.repetitions; ++rep) {
            SearchResult r;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                r = run_search(config.algorithm, grid, config.heuristic, threads, settings);
            } catch (const SearchHang&) {
                ++rec.hangs;
                continue;
            }
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            ++completed;
            total_s += secs;
            min_s = std::min(min_s, secs);
            max_s = std::max(max_s, secs);
            total_expanded += static_cast<double>(r.nodes_expanded);
            optimal = optimal && r.cost == oracle.cost;
            valid = valid && validate_path(grid, r);
            if (r.cost && (!rec.cost || *r.cost > *rec.cost))
                rec.cost = r.cost;
        }
        if (completed > 0) {
            rec.mean_s = total_s / completed;
            rec.min_s = min_s;
            rec.max_s = max_s;
            rec.mean_expanded = total_expanded / completed;
            rec.optimal = optimal;
            rec.valid_paths = valid;
        } else {
            rec.mean_s = rec.min_s = rec.max_s = rec.mean_expanded = std::numeric_limits<double>::quiet_NaN();
        }
        records.push_back(rec);
    }
    return records;
}

std::string emit(const std::vector<BenchRecord>& records, OutputFormat format)
{
    std::ostringstream out;
    switch (format) {
    case OutputFormat::Csv:
        out << kCsvHeader << '\n';
        for (const auto& r : records) {
            out << algorithm_name(r.algorithm) << ',' << heuristic_name(r.heuristic) << ',' << r.threads << ','
                << r.n << ',' << r.seed << ',' << r.repetitions << ',' << fmt_double(r.mean_s, "%.6f") << ','
                << fmt_double(r.min_s, "%.6f") << ',' << fmt_double(r.max_s, "%.6f") << ','
                << fmt_double(r.mean_expanded, "%.1f") << ',' << fmt_cost(r.cost) << ','
                << fmt_cost(r.oracle_cost) << ',' << (r.optimal ? "true" : "false") << ',' << r.hangs << '\n';
        }
        break;
    case OutputFormat::Markdown:
        out << "| Thread Count | Run Time (Seconds) | Min (s) | Max (s) | Mean Expanded | Cost | Oracle Cost | "
               "Optimal | Hangs |\n";
        out << "|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& r : records) {
            out << "| " << r.threads << " | " << fmt_double(r.mean_s, "%.5f") << " | "
                << fmt_double(r.min_s, "%.5f") << " | " << fmt_double(r.max_s, "%.5f") << " | "
                << fmt_double(r.mean_expanded, "%.1f") << " | " << fmt_cost(r.cost) << " | "
                << fmt_cost(r.oracle_cost) << " | " << (r.optimal ? "yes" : "no") << " | " << r.hangs << " |\n";
        }
        break;
    case OutputFormat::Json: {
        auto num = [](double v) -> nlohmann::ordered_json {
            if (std::isnan(v))
                return nullptr;
            return v;
        };
        auto cost = [](const std::optional<double>& c) -> nlohmann::ordered_json {
            if (!c)
                return nullptr;
            return *c;
        };
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : records) {
            nlohmann::ordered_json j;
            j["algorithm"] = algorithm_name(r.algorithm);
            j["heuristic"] = heuristic_name(r.heuristic);
            j["threads"] = r.threads;
            j["n"] = r.n;
            j["seed"] = r.seed;
            j["reps"] = r.repetitions;
            j["mean_s"] = num(r.mean_s);
            j["min_s"] = num(r.min_s);
            j["max_s"] = num(r.max_s);
            j["mean_expanded"] = num(r.mean_expanded);
            j["cost"] = cost(r.cost);
            j["oracle_cost"] = cost(r.oracle_cost);
            j["optimal"] = r.optimal;
            j["valid_paths"] = r.valid_paths;
            j["hangs"] = r.hangs;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    }
    return out.str();
}

Manifest gen_corpus(const std::vector<int>& sizes, int count, std::uint64_t seed,
                    const std::filesystem::path& directory, double wall_probability)
{
    if (sizes.empty())
        throw UsageError("corpus needs at least one size");
    if (count < 1)
        throw UsageError("corpus count must be at least 1");

    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec || !std::filesystem::is_directory(directory))
        throw GridError(GridError::Code::Io, "cannot create corpus directory " + directory.string());

    Manifest manifest;
    std::uint64_t next_seed = seed;
    for (int n : sizes) {
        for (int i = 0; i < count; ++i, ++next_seed) {
            const Grid grid = generate(n, wall_probability, next_seed);
            const auto oracle = dijkstra_oracle(grid);
            char name[64];
            std::snprintf(name, sizeof name, "n%d_%04d.grid", n, i);
            save_grid_file(grid, (directory / name).string());
            manifest.entries.push_back({name, n, next_seed, oracle.cost.value_or(-1.0)});
        }
    }

    std::ofstream out(directory / kManifestName, std::ios::binary | std::ios::trunc);
    if (!out)
        throw GridError(GridError::Code::Io, "cannot write manifest in " + directory.string());
    out << "file,n,seed,oracle_cost\n";
    for (const auto& e : manifest.entries)
        out << e.file << ',' << e.n << ',' << e.seed << ',' << fmt_double(e.oracle_cost, "%.0f") << '\n';
    if (!out)
        throw GridError(GridError::Code::Io, "manifest write failed in " + directory.string());
    return manifest;
}

} // namespace pastar
