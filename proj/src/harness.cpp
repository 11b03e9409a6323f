#include "matdom/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "matdom/core.hpp"
#include "matdom/io.hpp"

namespace matdom::bench {

namespace {

const std::set<std::string>& known_methods() {
    static const std::set<std::string> methods{"exact", "ga", "ga-woc", "greedy"};
    return methods;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

BenchRow baseline_row(const Instance& board, DominationModel model, const Placement& placement,
                      bool measure_time, std::chrono::steady_clock::time_point start) {
    BenchRow row;
    row.best_influence = influence(board, placement, model);
    row.best_penalty = penalty(occupancy(placement, board.dims()));
    row.best_fitness = row.best_influence - row.best_penalty;
    row.dominator_count = placement.size();
    row.wall_ms = measure_time ? elapsed_ms(start) : 0;
    return row;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

} // namespace

void BenchSpec::validate() const {
    if (sizes.empty() || methods.empty() || seeds.empty()) {
        throw ValidationError("benchmark spec needs at least one size, method and seed");
    }
    for (int n : sizes) {
        if (n < 1) {
            throw ValidationError("benchmark sizes must be positive");
        }
    }
    for (const std::string& m : methods) {
        if (!known_methods().count(m)) {
            throw ValidationError("unknown benchmark method: " + m);
        }
    }
    if (evaluation_budget < ga.population_size) {
        throw ValidationError("evaluation budget must be at least the population size");
    }
}

int budget_generations(long long budget, int population_size) {
    if (population_size < 1) {
        throw ValidationError("population size must be positive");
    }
    return static_cast<int>(std::max(1LL, budget / population_size - 1));
}

int budget_generations_per_expert(long long budget, int population_size, int experts) {
    if (experts < 1) {
        throw ValidationError("expert count must be positive");
    }
    return budget_generations(budget / experts, population_size);
}

std::vector<BenchRow> run_benchmark(const BenchSpec& spec) {
    spec.validate();

    std::vector<int> sizes = spec.sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::vector<std::string> methods = spec.methods;
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
    std::vector<std::uint64_t> seeds = spec.seeds;
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    std::vector<BenchRow> rows;
    long long run_id = 0;
    for (int n : sizes) {
        const Instance board = Instance::ones(n, n);
        for (const std::string& method : methods) {
            for (std::uint64_t seed : seeds) {
                BenchRow row;
                const auto start = std::chrono::steady_clock::now();
                if (method == "greedy") {
                    const Placement p = baselines::greedy_dominate(board, spec.model);
                    row = baseline_row(board, spec.model, p, spec.measure_time, start);
                } else if (method == "exact") {
                    const int candidates = spec.model == DominationModel::Adjacency
                                               ? board.dims().cell_count()
                                               : board.one_count();
                    if (candidates > spec.oracle.max_cells) {
                        row.status = "skipped:oracle-budget";
                    } else {
                        const Placement p =
                            baselines::exact_min_dominating(board, spec.model, spec.oracle);
                        row = baseline_row(board, spec.model, p, spec.measure_time, start);
                    }
                } else if (method == "ga") {
                    ga::GaConfig cfg = spec.ga;
                    cfg.model = spec.model;
                    cfg.seed = seed;
                    cfg.generations = budget_generations(spec.evaluation_budget,
                                                         cfg.population_size);
                    const ga::RunHistory h = ga::run(board.dims(), cfg);
                    row.generations = h.records.back().generation;
                    row.evaluations = h.total_evaluations;
                    row.best_fitness = h.best.fit.fitness;
                    row.best_influence = h.best.fit.influence;
                    row.best_penalty = h.best.fit.penalty;
                    row.dominator_count = ga::genome_size(h.best.genome);
                    row.wall_ms = spec.measure_time ? h.wall_ms : 0;
                } else { // ga-woc
                    woc::CrowdConfig cfg = spec.crowd;
                    cfg.ga = spec.ga;
                    cfg.ga.model = spec.model;
                    cfg.master_seed = seed;
                    cfg.ga.generations = budget_generations_per_expert(
                        spec.evaluation_budget, cfg.ga.population_size, cfg.experts);
                    const woc::CrowdResult res = woc::run_crowd(board.dims(), cfg);
                    row.generations = res.crowd.records.back().generation;
                    row.evaluations = res.crowd.total_evaluations;
                    row.best_fitness = res.crowd.best.fit.fitness;
                    row.best_influence = res.crowd.best.fit.influence;
                    row.best_penalty = res.crowd.best.fit.penalty;
                    row.dominator_count = ga::genome_size(res.crowd.best.genome);
                    row.wall_ms = spec.measure_time ? res.crowd.wall_ms : 0;
                }
                row.run_id = run_id++;
                row.method = method;
                row.n = n;
                row.seed = seed;
                rows.push_back(std::move(row));
            }
        }
    }

    if (!spec.out_path.empty()) {
        io::write_text_file(spec.out_path, rows_to_csv(rows));
    }
    return rows;
}

std::string rows_to_csv(const std::vector<BenchRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const BenchRow& r : rows) {
        out += std::to_string(r.run_id) + ',' + r.method + ',' + std::to_string(r.n) + ',' +
               std::to_string(r.seed) + ',' + std::to_string(r.generations) + ',' +
               std::to_string(r.evaluations) + ',' + std::to_string(r.best_fitness) + ',' +
               std::to_string(r.best_influence) + ',' + std::to_string(r.best_penalty) + ',' +
               std::to_string(r.dominator_count) + ',' + std::to_string(r.wall_ms) + ',' +
               r.status + '\n';
    }
    return out;
}

std::vector<BenchRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw ValidationError("benchmark CSV: missing or unexpected header");
    }
    std::vector<BenchRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream fs(line);
        while (std::getline(fs, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 12) {
            throw ValidationError("benchmark CSV: expected 12 fields, got " +
                                  std::to_string(fields.size()));
        }
        BenchRow r;
        r.run_id = std::stoll(fields[0]);
        r.method = fields[1];
        r.n = std::stoi(fields[2]);
        r.seed = std::stoull(fields[3]);
        r.generations = std::stoi(fields[4]);
        r.evaluations = std::stoll(fields[5]);
        r.best_fitness = std::stoi(fields[6]);
        r.best_influence = std::stoi(fields[7]);
        r.best_penalty = std::stoi(fields[8]);
        r.dominator_count = std::stoi(fields[9]);
        r.wall_ms = std::stoll(fields[10]);
        r.status = fields[11];
        rows.push_back(std::move(r));
    }
    return rows;
}

Summary summarize(const std::vector<BenchRow>& rows) {
    if (rows.empty()) {
        throw ValidationError("summarize: no rows");
    }
    // Group (n, method); input order is already deterministic.
    std::vector<std::pair<int, std::string>> keys;
    for (const BenchRow& r : rows) {
        keys.emplace_back(r.n, r.method);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    Summary summary;
    for (const auto& [n, method] : keys) {
        MethodSummary ms;
        ms.n = n;
        ms.method = method;
        double sum_f = 0.0;
        double sum_w = 0.0;
        std::vector<int> fs;
        std::vector<std::int64_t> ws;
        for (const BenchRow& r : rows) {
            if (r.n != n || r.method != method || r.status != "ok") {
                continue;
            }
            fs.push_back(r.best_fitness);
            ws.push_back(r.wall_ms);
            sum_f += r.best_fitness;
            sum_w += static_cast<double>(r.wall_ms);
        }
        if (fs.empty()) {
            continue;
        }
        ms.runs = static_cast<int>(fs.size());
        ms.mean_fitness = sum_f / ms.runs;
        ms.mean_wall_ms = sum_w / ms.runs;
        double var_f = 0.0;
        double var_w = 0.0;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            var_f += (fs[i] - ms.mean_fitness) * (fs[i] - ms.mean_fitness);
            var_w += (static_cast<double>(ws[i]) - ms.mean_wall_ms) *
                     (static_cast<double>(ws[i]) - ms.mean_wall_ms);
        }
        ms.std_fitness = std::sqrt(var_f / ms.runs);
        ms.std_wall_ms = std::sqrt(var_w / ms.runs);
        ms.min_fitness = *std::min_element(fs.begin(), fs.end());
        ms.max_fitness = *std::max_element(fs.begin(), fs.end());
        ms.min_wall_ms = *std::min_element(ws.begin(), ws.end());
        ms.max_wall_ms = *std::max_element(ws.begin(), ws.end());
        summary.per_method.push_back(std::move(ms));
    }

    // Head-to-head ga-woc vs ga per size, paired by seed.
    std::vector<int> sizes;
    for (const BenchRow& r : rows) {
        sizes.push_back(r.n);
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (int n : sizes) {
        HeadToHead h2h;
        h2h.n = n;
        double score = 0.0;
        double sum_ga = 0.0;
        double sum_woc = 0.0;
        for (const BenchRow& ga_row : rows) {
            if (ga_row.n != n || ga_row.method != "ga" || ga_row.status != "ok") {
                continue;
            }
            for (const BenchRow& woc_row : rows) {
                if (woc_row.n != n || woc_row.method != "ga-woc" ||
                    woc_row.seed != ga_row.seed || woc_row.status != "ok") {
                    continue;
                }
                ++h2h.pairs;
                sum_ga += ga_row.best_fitness;
                sum_woc += woc_row.best_fitness;
                if (woc_row.best_fitness > ga_row.best_fitness) {
                    score += 1.0;
                } else if (woc_row.best_fitness == ga_row.best_fitness) {
                    score += 0.5;
                }
                break;
            }
        }
        if (h2h.pairs > 0) {
            h2h.win_rate = score / h2h.pairs;
            h2h.mean_ga = sum_ga / h2h.pairs;
            h2h.mean_woc = sum_woc / h2h.pairs;
            summary.woc_vs_ga.push_back(h2h);
        }
    }
    return summary;
}

std::string summary_to_text(const Summary& summary) {
    std::string out;
    out += "n method runs mean_fitness std_fitness min max mean_wall_ms\n";
    for (const MethodSummary& ms : summary.per_method) {
        out += std::to_string(ms.n) + ' ' + ms.method + ' ' + std::to_string(ms.runs) + ' ' +
               format_double(ms.mean_fitness) + ' ' + format_double(ms.std_fitness) + ' ' +
               std::to_string(ms.min_fitness) + ' ' + std::to_string(ms.max_fitness) + ' ' +
               format_double(ms.mean_wall_ms) + '\n';
    }
    if (!summary.woc_vs_ga.empty()) {
        out += "\nhead-to-head ga-woc vs ga (win rate counts ties as 0.5)\n";
        out += "n pairs win_rate mean_ga mean_ga_woc\n";
        for (const HeadToHead& h : summary.woc_vs_ga) {
            out += std::to_string(h.n) + ' ' + std::to_string(h.pairs) + ' ' +
                   format_double(h.win_rate) + ' ' + format_double(h.mean_ga) + ' ' +
                   format_double(h.mean_woc) + '\n';
        }
    }
    return out;
}

} // namespace matdom::bench
