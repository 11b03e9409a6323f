#include "matdom/woc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "matdom/core.hpp"

namespace matdom::woc {

void CrowdConfig::validate(Dims dims) const {
    if (experts < 1) {
        throw ConfigError("a crowd needs at least one expert");
    }
    if (dims.rows != dims.cols) {
        throw ConfigError("the crowd layer needs a square grid; got " +
                          std::to_string(dims.rows) + "x" + std::to_string(dims.cols));
    }
    if (aggregation_interval < 1) {
        throw ConfigError("aggregation_interval must be at least 1");
    }
    if (!(elite_fraction > 0.0) || elite_fraction > 1.0) {
        throw ConfigError("elite_fraction must lie in (0,1]");
    }
    if (bias < 0.0 || bias > 1.0) {
        throw ConfigError("bias must lie in [0,1]");
    }
    ga.validate(dims);
}

double jittered_mutation_rate(double base, int expert, int expert_count) {
    if (expert_count <= 1) {
        return base;
    }
    const double factor = 0.5 + static_cast<double>(expert) / (expert_count - 1);
    return std::clamp(base * factor, 0.0, 1.0);
}

ga::GaConfig expert_config(const CrowdConfig& cfg, int expert) {
    ga::GaConfig out = cfg.ga;
    out.seed = gen::mix_seed(cfg.master_seed, static_cast<std::uint64_t>(expert));
    out.mutation_rate = jittered_mutation_rate(cfg.ga.mutation_rate, expert, cfg.experts);
    return out;
}

std::vector<Placement> collect_elites(const std::vector<ga::Individual>& population,
                                      double elite_fraction) {
    if (population.empty()) {
        throw ValidationError("collect_elites: empty population");
    }
    const int count = std::max(
        1, static_cast<int>(std::ceil(elite_fraction * static_cast<double>(population.size()))));
    std::vector<int> order(population.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return population[static_cast<std::size_t>(lhs)].fit.fitness >
               population[static_cast<std::size_t>(rhs)].fit.fitness;
    });
    std::vector<Placement> elites;
    elites.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count && i < static_cast<int>(population.size()); ++i) {
        const int idx = order[static_cast<std::size_t>(i)];
        elites.push_back(ga::genome_placement(population[static_cast<std::size_t>(idx)].genome));
    }
    return elites;
}

namespace {

ConsensusMatrix barrier_consensus(const std::vector<ga::GaEngine>& engines, int n,
                                  double elite_fraction) {
    std::vector<Placement> elites;
    for (const ga::GaEngine& engine : engines) {
        std::vector<Placement> part = collect_elites(engine.population(), elite_fraction);
        elites.insert(elites.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    }
    return build_consensus(elites, n);
}

} // namespace

CrowdResult run_crowd(Dims dims, const CrowdConfig& cfg) {
    cfg.validate(dims);
    const auto start = std::chrono::steady_clock::now();
    const int n = dims.rows;

    std::vector<ga::GaEngine> engines;
    engines.reserve(static_cast<std::size_t>(cfg.experts));
    for (int e = 0; e < cfg.experts; ++e) {
        engines.emplace_back(dims, expert_config(cfg, e));
    }

    const int total_generations = cfg.ga.generations;
    ConsensusMatrix consensus;
    bool have_consensus = false;
    int clock = 0;
    while (clock < total_generations) {
        const int chunk = std::min(cfg.aggregation_interval, total_generations - clock);
        for (ga::GaEngine& engine : engines) {
            engine.advance(chunk, have_consensus ? &consensus : nullptr, cfg.bias);
        }
        clock += chunk;
        // Barrier: rebuild the consensus from every expert's current elites.
        consensus = barrier_consensus(engines, n, cfg.elite_fraction);
        have_consensus = true;
    }
    if (!have_consensus) {
        // Zero-generation run: the initial populations still form a crowd.
        consensus = barrier_consensus(engines, n, cfg.elite_fraction);
    }

    CrowdResult result;
    result.aggregate = aggregate_solution(consensus);
    const ga::Evaluator& eval = engines.front().evaluator();
    result.aggregate_fitness = eval(ga::Genome(result.aggregate));

    // Overall best: the aggregate is seeded first so it wins ties.
    ga::Individual best{ga::Genome(result.aggregate), result.aggregate_fitness};
    result.best_is_aggregate = true;
    for (const ga::GaEngine& engine : engines) {
        const ga::Individual& expert_best = engine.best();
        if (expert_best.fit.fitness > best.fit.fitness) {
            best = expert_best;
            result.best_is_aggregate = false;
        }
    }

    result.experts.reserve(engines.size());
    for (const ga::GaEngine& engine : engines) {
        result.experts.push_back(engine.history());
    }

    // Crowd-level per-generation records. An expert that stopped early keeps
    // reporting its final record.
    std::size_t record_count = 0;
    for (const ga::RunHistory& h : result.experts) {
        record_count = std::max(record_count, h.records.size());
    }
    ga::RunHistory crowd;
    for (std::size_t g = 0; g < record_count; ++g) {
        ga::GenerationStat rec;
        rec.generation = static_cast<int>(g);
        double mean_sum = 0.0;
        long long evals = 0;
        int best_expert = -1;
        for (std::size_t e = 0; e < result.experts.size(); ++e) {
            const auto& records = result.experts[e].records;
            const ga::GenerationStat& er = records[std::min(g, records.size() - 1)];
            mean_sum += er.mean_fitness;
            evals += er.evaluations;
            if (best_expert < 0 || er.best_fitness > rec.best_fitness) {
                rec.best_fitness = er.best_fitness;
                rec.best_influence = er.best_influence;
                rec.best_penalty = er.best_penalty;
                best_expert = static_cast<int>(e);
            }
        }
        rec.mean_fitness = mean_sum / static_cast<double>(result.experts.size());
        rec.evaluations = evals;
        crowd.records.push_back(rec);
    }
    crowd.best = std::move(best);
    crowd.total_evaluations = 0;
    for (const ga::GaEngine& engine : engines) {
        crowd.total_evaluations += engine.evaluations();
    }
    crowd.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    result.crowd = std::move(crowd);
    return result;
}

std::string crowd_history_to_csv(const CrowdResult& result, int aggregation_interval) {
    if (aggregation_interval < 1) {
        throw ValidationError("aggregation_interval must be at least 1");
    }
    std::string out = "generation,best_fitness,mean_fitness,best_influence,best_penalty,"
                      "evaluations,expert_id,barrier_index\n";
    char mean_buf[64];
    for (std::size_t e = 0; e < result.experts.size(); ++e) {
        for (const ga::GenerationStat& rec : result.experts[e].records) {
            const int barrier =
                rec.generation == 0 ? 0 : (rec.generation - 1) / aggregation_interval;
            std::snprintf(mean_buf, sizeof(mean_buf), "%.4f", rec.mean_fitness);
            out += std::to_string(rec.generation) + ',' + std::to_string(rec.best_fitness) + ',' +
                   mean_buf + ',' + std::to_string(rec.best_influence) + ',' +
                   std::to_string(rec.best_penalty) + ',' + std::to_string(rec.evaluations) +
                   ',' + std::to_string(e) + ',' + std::to_string(barrier) + '\n';
        }
    }
    return out;
}

} // namespace matdom::woc
