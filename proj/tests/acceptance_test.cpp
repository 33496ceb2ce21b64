// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include "pastar/bench.hpp"
#include "pastar/rng.hpp"
#include "pastar/sync.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace pastar;
using namespace std::chrono_literals;

namespace {

constexpr int kThreadSweep[] = {1, 2, 4, 8, 16};
constexpr Algorithm kAlgorithms[] = {Algorithm::Sequential, Algorithm::Kpbfs, Algorithm::DpaRandom,
                                     Algorithm::DpaBlackboard, Algorithm::Hda};

int g_failures = 0;

void report(int criterion, bool pass, const std::string& title, const std::string& detail)
{
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++g_failures;
}

void note(const std::string& text)
{
    std::printf("       %s\n", text.c_str());
    std::fflush(stdout);
}

bool decentralized(Algorithm a)
{
    return a == Algorithm::DpaRandom || a == Algorithm::DpaBlackboard || a == Algorithm::Hda;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int precision = 4)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

/// Mean wall-clock seconds of `reps` runs on each grid, spawn to join.
double mean_runtime(Algorithm a, const std::vector<Grid>& grids, const HeuristicKind& kind, int threads, int reps,
                    const EngineSettings& settings = {})
{
    double total = 0.0;
    int runs = 0;
    for (const auto& g : grids) {
        for (int r = 0; r < reps; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            (void)run_search(a, g, kind, threads, settings);
            total += seconds_since(t0);
            ++runs;
        }
    }
    return total / runs;
}

struct LedgerTally
{
    std::uint64_t runs = 0;
    std::uint64_t unbalanced = 0;
};

LedgerTally g_ledger;

void criterion_oracle_optimality()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Grid> grids;
    std::vector<std::optional<double>> oracle;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        grids.push_back(generate(100, 0.2, seed));
        oracle.push_back(dijkstra_oracle(grids.back()).cost);
    }

    int runs = 0;
    int failures = 0;
    std::string first_failure;
    for (Algorithm a : kAlgorithms) {
        for (const auto& kind : {HeuristicKind::euclidean(), HeuristicKind::manhattan()}) {
            for (int threads : kThreadSweep) {
                for (std::size_t i = 0; i < grids.size(); ++i) {
                    ++runs;
                    bool ok = false;
                    try {
                        const auto r = run_search(a, grids[i], kind, threads);
                        ok = r.cost == oracle[i] && validate_path(grids[i], r);
                        if (decentralized(a)) {
                            ++g_ledger.runs;
                            if (r.messages.sent != r.messages.received || r.messages.residual_inbox != 0)
                                ++g_ledger.unbalanced;
                        }
                    } catch (const std::exception&) {
                        ok = false;
                    }
                    if (!ok && failures++ == 0) {
                        std::ostringstream s;
                        s << algorithm_name(a) << "/" << heuristic_name(kind.variant) << "/t" << threads << "/seed"
                          << i;
                        first_failure = s.str();
                    }
                }
            }
        }
    }
    std::string detail = std::to_string(runs - failures) + "/" + std::to_string(runs) + " runs exact and valid, " +
                         fmt(seconds_since(t0), 1) + " s";
    if (failures > 0)
        detail += ", first failure " + first_failure;
    report(1, failures == 0, "oracle optimality, 5 algorithms x 2 heuristics x 5 thread counts x 100 grids", detail);
}

std::vector<Grid> expensive_grids()
{
    std::vector<Grid> grids;
    for (std::uint64_t seed = 0; seed < 3; ++seed)
        grids.push_back(generate(100, 0.2, seed));
    return grids;
}

const HeuristicKind kExpensive = HeuristicKind::expensive(1000us);
constexpr int kExpensiveReps = 3;

void criterion_kpbfs_expensive()
{
    const auto grids = expensive_grids();
    const double t1 = mean_runtime(Algorithm::Kpbfs, grids, kExpensive, 1, kExpensiveReps);
    const double t4 = mean_runtime(Algorithm::Kpbfs, grids, kExpensive, 4, kExpensiveReps);
    const double t16 = mean_runtime(Algorithm::Kpbfs, grids, kExpensive, 16, kExpensiveReps);
    report(2, t4 <= 0.6 * t1 && t16 < t4, "KPBFS expensive heuristic, t4 <= 0.6 x t1 and t16 < t4",
           "t1=" + fmt(t1) + " s, t4=" + fmt(t4) + " s, t16=" + fmt(t16) + " s, t4/t1=" + fmt(t4 / t1, 3));
}

void criterion_hda_expensive()
{
    const auto grids = expensive_grids();
    const double t1 = mean_runtime(Algorithm::Hda, grids, kExpensive, 1, kExpensiveReps);
    const double t4 = mean_runtime(Algorithm::Hda, grids, kExpensive, 4, kExpensiveReps);
    const double t8 = mean_runtime(Algorithm::Hda, grids, kExpensive, 8, kExpensiveReps);
    report(3, t4 <= 0.85 * t1 && t8 < t1, "HDA* expensive heuristic, t4 <= 0.85 x t1 and t8 < t1",
           "t1=" + fmt(t1) + " s, t4=" + fmt(t4) + " s, t8=" + fmt(t8) + " s, t4/t1=" + fmt(t4 / t1, 3));
}

void criterion_dpa_expensive()
{
    const auto grids = expensive_grids();
    const double t1 = mean_runtime(Algorithm::DpaBlackboard, grids, kExpensive, 1, kExpensiveReps);
    const double t8 = mean_runtime(Algorithm::DpaBlackboard, grids, kExpensive, 8, kExpensiveReps);
    report(4, t8 < t1, "DPA* (blackboard) expensive heuristic, t8 < t1",
           "t1=" + fmt(t1) + " s, t8=" + fmt(t8) + " s, t8/t1=" + fmt(t8 / t1, 3));

    const double r1 = mean_runtime(Algorithm::DpaRandom, grids, kExpensive, 1, kExpensiveReps);
    const double r8 = mean_runtime(Algorithm::DpaRandom, grids, kExpensive, 8, kExpensiveReps);
    note("info: dpa-random t1=" + fmt(r1) + " s, t8=" + fmt(r8) + " s, t8/t1=" + fmt(r8 / r1, 3));
}

void criterion_kpbfs_contention()
{
    std::vector<Grid> grids;
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        grids.push_back(generate(1000, 0.2, seed));
    const auto kind = HeuristicKind::manhattan();
    const double t1 = mean_runtime(Algorithm::Kpbfs, grids, kind, 1, 3);
    const double t16 = mean_runtime(Algorithm::Kpbfs, grids, kind, 16, 3);
    const bool hard_fail = t1 > 2.0 * t16;
    std::string detail = "t1=" + fmt(t1) + " s, t16=" + fmt(t16) + " s";
    if (t16 < t1 && !hard_fail)
        detail += ", warning: 16 threads faster than 1 on this machine";
    report(5, !hard_fail, "KPBFS cheap-heuristic contention at n=1000, t16 >= t1 (hard-fail only if 2x faster)",
           detail);
}

void criterion_hang_elimination()
{
    const auto kind = HeuristicKind::manhattan();
    EngineSettings settings;
    settings.timeout = 120s;
    for (Algorithm a : {Algorithm::DpaRandom, Algorithm::Hda}) {
        int hangs = 0;
        int errors = 0;
        double slowest = 0.0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const Grid g = generate(1000, 0.2, seed);
            settings.route_seed = seed;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                (void)run_search(a, g, kind, 16, settings);
            } catch (const SearchHang&) {
                ++hangs;
            } catch (const std::exception&) {
                ++errors;
            }
            slowest = std::max(slowest, seconds_since(t0));
        }
        report(6, hangs == 0 && errors == 0 && slowest < 120.0,
               std::string("hang elimination, 50 runs of ") + std::string(algorithm_name(a)) +
                   " at 16 threads, n=1000",
               "hangs=" + std::to_string(hangs) + ", errors=" + std::to_string(errors) + ", slowest run " +
                   fmt(slowest, 3) + " s");
    }
}

void criterion_heuristic_accuracy()
{
    double manhattan = 0.0;
    double euclidean = 0.0;
    constexpr int kSeeds = 50;
    for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
        const Grid g = generate(1000, 0.2, seed);
        manhattan += static_cast<double>(astar_sequential(g, HeuristicKind::manhattan()).nodes_expanded);
        euclidean += static_cast<double>(astar_sequential(g, HeuristicKind::euclidean()).nodes_expanded);
    }
    manhattan /= kSeeds;
    euclidean /= kSeeds;
    report(7, manhattan < euclidean, "sequential A* expands fewer nodes with manhattan than euclidean at n=1000",
           "mean expanded manhattan=" + fmt(manhattan, 1) + ", euclidean=" + fmt(euclidean, 1));
}

void criterion_inadmissible()
{
    int runs = 0;
    int failures = 0;
    int above = 0;
    for (Algorithm a : kAlgorithms) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const Grid g = generate(100, 0.2, seed);
            const double oracle = *dijkstra_oracle(g).cost;
            const auto kind = HeuristicKind::inadmissible(5.0, seed);
            ++runs;
            try {
                const auto r = run_search(a, g, kind, 4);
                if (!r.cost || *r.cost < oracle || !validate_path(g, r))
                    ++failures;
                else if (*r.cost > oracle)
                    ++above;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    report(8, failures == 0, "inadmissible heuristic at 4 threads, cost >= oracle and path valid",
           std::to_string(runs - failures) + "/" + std::to_string(runs) + " runs feasible, " +
               std::to_string(above) + " strictly above optimal");
}

bool barrier_stress(int trials, std::string& detail)
{
    Xoshiro256 rng(77);
    for (int trial = 0; trial < trials; ++trial) {
        const int workers = 1 + static_cast<int>(rng.next_below(8));
        std::vector<int> rounds(static_cast<std::size_t>(workers));
        std::vector<std::uint64_t> jitter(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            rounds[static_cast<std::size_t>(w)] = static_cast<int>(rng.next_below(6));
            jitter[static_cast<std::size_t>(w)] = rng.next();
        }

        DynamicBarrier barrier(workers);
        std::atomic<int> finished{0};
        std::promise<void> all_done;
        auto done = all_done.get_future();
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                Xoshiro256 local(jitter[static_cast<std::size_t>(w)]);
                for (int r = 0; r < rounds[static_cast<std::size_t>(w)]; ++r) {
                    if (local.next_below(2) == 0)
                        std::this_thread::yield();
                    barrier.wait(w);
                }
                barrier.leave(w);
                if (finished.fetch_add(1) + 1 == workers)
                    all_done.set_value();
            });
        }
        const bool ok = done.wait_for(10s) == std::future_status::ready;
        if (!ok)
            barrier.cancel();
        for (auto& t : threads)
            t.join();
        if (!ok) {
            detail = "deadlock in trial " + std::to_string(trial);
            return false;
        }
    }
    detail = std::to_string(trials) + " schedules without deadlock";
    return true;
}

bool incumbent_race(int trials, std::string& detail)
{
    Xoshiro256 rng(99);
    for (int trial = 0; trial < trials; ++trial) {
        constexpr int kWorkers = 8;
        constexpr int kOffers = 200;
        std::vector<std::vector<double>> offers(kWorkers);
        double minimum = kInfinity;
        for (auto& list : offers) {
            for (int i = 0; i < kOffers; ++i) {
                list.push_back(static_cast<double>(1 + rng.next_below(100000)));
                minimum = std::min(minimum, list.back());
            }
        }
        Incumbent inc;
        std::atomic<bool> go{false};
        std::vector<std::thread> threads;
        for (int w = 0; w < kWorkers; ++w) {
            threads.emplace_back([&, w] {
                while (!go.load())
                    std::this_thread::yield();
                for (double v : offers[static_cast<std::size_t>(w)])
                    inc.try_improve(v, w);
            });
        }
        go = true;
        for (auto& t : threads)
            t.join();
        if (inc.cost() != minimum) {
            detail = "trial " + std::to_string(trial) + " ended at " + fmt(inc.cost(), 0) + ", minimum " +
                     fmt(minimum, 0);
            return false;
        }
    }
    detail = std::to_string(trials) + " races ended at the minimum";
    return true;
}

void criterion_sync_properties()
{
    std::string barrier_detail;
    std::string incumbent_detail;
    const bool barrier_ok = barrier_stress(10000, barrier_detail);
    const bool incumbent_ok = incumbent_race(500, incumbent_detail);
    const bool ledger_ok = g_ledger.runs > 0 && g_ledger.unbalanced == 0;
    report(9, barrier_ok && incumbent_ok && ledger_ok,
           "sync kit: barrier stress, incumbent race, ledger balance after criterion 1 runs",
           barrier_detail + "; " + incumbent_detail + "; " + std::to_string(g_ledger.runs - g_ledger.unbalanced) +
               "/" + std::to_string(g_ledger.runs) + " decentralized runs balanced");
}

} // namespace

int main()
{
    std::printf("hardware threads: %u\n", std::thread::hardware_concurrency());
    std::fflush(stdout);

    criterion_oracle_optimality();
    criterion_kpbfs_expensive();
    criterion_hda_expensive();
    criterion_dpa_expensive();
    criterion_kpbfs_contention();
    criterion_hang_elimination();
    criterion_heuristic_accuracy();
    criterion_inadmissible();
    criterion_sync_properties();

    std::printf("%s: %d criterion check(s) failed\n", g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures);
    return g_failures == 0 ? 0 : 1;
}
