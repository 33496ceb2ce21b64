// pastar: benchmark harness and grid tooling for the parallel A* engines.
//
// Exit codes: 0 success, 1 usage, 2 correctness failure, 3 every run hung.

#include "pastar/bench.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIncorrect = 2;
constexpr int kExitAllHung = 3;

struct BenchArgs
{
    std::string algorithm = "sequential";
    std::string heuristic = "manhattan";
    std::vector<int> threads{1};
    int size = 100;
    double wall_prob = 0.2;
    std::uint64_t seed = 0;
    std::optional<int> reps; ///< 10 by default, 5 for the expensive heuristics
    double timeout_secs = 120.0;
    std::string format = "csv";
    std::string out;
    std::string grid_file;
    double delay_ms = 1.0;
    double noise = pastar::kDefaultNoiseScale;
    std::size_t batch = 1;
    double bb_threshold = 5.0;
    std::size_t bb_batch = 4;
    bool no_warmup = false;
};

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw pastar::GridError(pastar::GridError::Code::Io, "cannot write " + path);
    f << text;
}

int run_bench_command(const BenchArgs& args)
{
    using namespace pastar;

    BenchConfig config;
    const auto algorithm = parse_algorithm_name(args.algorithm);
    if (!algorithm)
        throw UsageError("unknown algorithm '" + args.algorithm + "' (expected one of: " + algorithm_names() + ")");
    const auto variant = parse_heuristic_name(args.heuristic);
    if (!variant)
        throw UsageError("unknown heuristic '" + args.heuristic + "' (expected one of: " + heuristic_names() + ")");
    const auto format = parse_format_name(args.format);
    if (!format)
        throw UsageError("unknown format '" + args.format + "' (expected one of: " + format_names() + ")");

    config.algorithm = *algorithm;
    config.heuristic.variant = *variant;
    config.heuristic.delay = std::chrono::microseconds(std::llround(args.delay_ms * 1000.0));
    config.heuristic.noise_scale = args.noise;
    config.heuristic.noise_seed = args.seed;
    config.threads = args.threads;
    config.n = args.size;
    config.wall_probability = args.wall_prob;
    config.seed = args.seed;
    config.repetitions = args.reps.value_or(config.heuristic.uses_delay() ? 5 : 10);
    config.timeout = std::chrono::milliseconds(std::llround(args.timeout_secs * 1000.0));
    config.output = *format;
    config.kpbfs_batch = args.batch;
    config.blackboard = BlackboardStrategy{args.bb_threshold, args.bb_batch};
    config.warmup = !args.no_warmup;
    if (!args.grid_file.empty())
        config.grid = load_grid_file(args.grid_file);

    const auto records = run_bench(config);
    write_output(emit(records, config.output), args.out);

    bool all_hung = true;
    bool incorrect = false;
    for (const auto& r : records) {
        if (r.hangs < r.repetitions)
            all_hung = false;
        if (r.hangs < r.repetitions && (!r.valid_paths || (r.admissible && !r.optimal)))
            incorrect = true;
    }
    if (incorrect) {
        std::cerr << "pastar: correctness failure (cost differs from the oracle or path invalid)\n";
        return kExitIncorrect;
    }
    if (all_hung) {
        std::cerr << "pastar: every run exceeded the timeout\n";
        return kExitAllHung;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Parallel A* benchmark harness"};
    app.require_subcommand(1);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run an engine over a grid and report timing statistics");
    bench_cmd->add_option("--algorithm", bench.algorithm, "sequential, kpbfs, dpa-random, dpa-blackboard, hda");
    bench_cmd->add_option("--heuristic", bench.heuristic,
                          "euclidean, manhattan, inadmissible, expensive, expensive-inadmissible");
    bench_cmd->add_option("--threads", bench.threads, "Comma-separated thread counts")->delimiter(',');
    bench_cmd->add_option("--size", bench.size, "Grid side length");
    bench_cmd->add_option("--wall-prob", bench.wall_prob, "Wall probability per cell");
    bench_cmd->add_option("--seed", bench.seed, "Grid and noise seed");
    bench_cmd->add_option("--reps", bench.reps, "Timed repetitions per thread count");
    bench_cmd->add_option("--timeout-secs", bench.timeout_secs, "Per-run watchdog");
    bench_cmd->add_option("--format", bench.format, "csv, markdown, json");
    bench_cmd->add_option("--out", bench.out, "Output file (default stdout)");
    bench_cmd->add_option("--grid-file", bench.grid_file, "Load a .grid file instead of generating");
    bench_cmd->add_option("--delay-ms", bench.delay_ms, "Delay of the expensive heuristics");
    bench_cmd->add_option("--noise", bench.noise, "Noise scale of the inadmissible heuristics");
    bench_cmd->add_option("--batch", bench.batch, "Nodes popped per lock acquisition (kpbfs)");
    bench_cmd->add_option("--bb-threshold", bench.bb_threshold, "Blackboard f threshold");
    bench_cmd->add_option("--bb-batch", bench.bb_batch, "Blackboard transfer batch");
    bench_cmd->add_flag("--no-warmup", bench.no_warmup, "Skip the untimed warm-up run");

    std::vector<int> corpus_sizes{10, 100, 1000};
    int corpus_count = 5;
    std::uint64_t corpus_seed = 0;
    double corpus_wall = 0.2;
    std::string corpus_dir;
    auto* corpus_cmd = app.add_subcommand("corpus", "Write a corpus of .grid files plus manifest.csv");
    corpus_cmd->add_option("--sizes", corpus_sizes, "Comma-separated grid sizes")->delimiter(',');
    corpus_cmd->add_option("--count", corpus_count, "Grids per size");
    corpus_cmd->add_option("--seed", corpus_seed, "First seed");
    corpus_cmd->add_option("--wall-prob", corpus_wall, "Wall probability per cell");
    corpus_cmd->add_option("--dir", corpus_dir, "Output directory")->required();

    int gen_size = 10;
    double gen_wall = 0.2;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("generate", "Print (or write) one generated grid");
    gen_cmd->add_option("--size", gen_size, "Grid side length");
    gen_cmd->add_option("--wall-prob", gen_wall, "Wall probability per cell");
    gen_cmd->add_option("--seed", gen_seed, "Seed");
    gen_cmd->add_option("--out", gen_out, "Output .grid file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bench_cmd)
            return run_bench_command(bench);
        if (*corpus_cmd) {
            const auto manifest = pastar::gen_corpus(corpus_sizes, corpus_count, corpus_seed, corpus_dir, corpus_wall);
            std::cout << "wrote " << manifest.entries.size() << " grids to " << corpus_dir << '\n';
            return kExitOk;
        }
        if (*gen_cmd) {
            const auto grid = pastar::generate(gen_size, gen_wall, gen_seed);
            write_output(pastar::serialize(grid) + '\n', gen_out);
            return kExitOk;
        }
    } catch (const pastar::UsageError& e) {
        std::cerr << "pastar: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pastar::GridError& e) {
        std::cerr << "pastar: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
