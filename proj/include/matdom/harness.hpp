#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matdom/baselines.hpp"
#include "matdom/ga.hpp"
#include "matdom/woc.hpp"

namespace matdom::bench {

// One benchmark campaign: every (size, method, seed) cell runs once. The
// heuristic methods (ga, ga-woc) receive identical evaluation budgets:
// generations are derived so a run consumes exactly `evaluation_budget`
// fitness evaluations (population * (generations + 1), split evenly across
// experts for the crowd).
struct BenchSpec {
    std::vector<int> sizes;
    std::vector<std::string> methods; // subset of {greedy, exact, ga, ga-woc}
    std::vector<std::uint64_t> seeds;
    long long evaluation_budget = 10000;
    DominationModel model = DominationModel::Adjacency;
    std::string out_path;     // CSV written here when non-empty
    bool measure_time = true; // false pins wall_ms to 0 for byte-stable output
    ga::GaConfig ga;          // heuristic base parameters; seed set per cell
    woc::CrowdConfig crowd;   // crowd parameters; ga base and seed set per cell
    baselines::OracleBudget oracle;

    void validate() const;
};

struct BenchRow {
    long long run_id = 0;
    std::string method;
    int n = 0;
    std::uint64_t seed = 0;
    int generations = 0;
    long long evaluations = 0;
    int best_fitness = 0;
    int best_influence = 0;
    int best_penalty = 0;
    int dominator_count = 0;
    std::int64_t wall_ms = 0;
    std::string status = "ok"; // or a skip reason; never silently omitted

    bool operator==(const BenchRow&) const = default;
};

// Generations that make a run consume exactly `budget` evaluations
// (floored; at least 1).
int budget_generations(long long budget, int population_size);
int budget_generations_per_expert(long long budget, int population_size, int experts);

// Runs every cell in deterministic (size, method name, seed) order and
// writes the CSV when spec.out_path is set.
std::vector<BenchRow> run_benchmark(const BenchSpec& spec);

inline constexpr const char* kCsvHeader =
    "run_id,method,n,seed,generations,evaluations,best_fitness,best_influence,"
    "best_penalty,dominator_count,wall_ms,status";

std::string rows_to_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> parse_csv(const std::string& text);

struct MethodSummary {
    int n = 0;
    std::string method;
    int runs = 0;
    double mean_fitness = 0.0;
    double std_fitness = 0.0;
    int min_fitness = 0;
    int max_fitness = 0;
    double mean_wall_ms = 0.0;
    double std_wall_ms = 0.0;
    std::int64_t min_wall_ms = 0;
    std::int64_t max_wall_ms = 0;
};

struct HeadToHead {
    int n = 0;
    int pairs = 0;       // seeds where both ga and ga-woc completed
    double win_rate = 0; // fraction of seeds where ga-woc beats ga; ties count 0.5
    double mean_ga = 0.0;
    double mean_woc = 0.0;
};

struct Summary {
    std::vector<MethodSummary> per_method; // (n asc, method asc)
    std::vector<HeadToHead> woc_vs_ga;     // sizes where both heuristics ran
};

Summary summarize(const std::vector<BenchRow>& rows);
std::string summary_to_text(const Summary& summary);

} // namespace matdom::bench
