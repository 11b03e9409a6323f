#pragma once

#include <string>
#include <vector>

#include "matdom/consensus.hpp"
#include "matdom/ga.hpp"

namespace matdom::woc {

// A crowd of independent expert populations that periodically pool their
// elites into a consensus matrix and evolve under its bias.
struct CrowdConfig {
    int experts = 5;
    ga::GaConfig ga; // per-expert base; seed and mutation_rate are derived per expert
    int aggregation_interval = 10; // generations between consensus rebuilds
    double elite_fraction = 0.2;   // share of each population contributing to consensus
    double bias = 0.3;             // consensus weight in selection and mutation
    std::uint64_t master_seed = 0;

    void validate(Dims dims) const;
};

// Expert i mutates at base * (0.5 + i/(E-1)), clamped to [0,1]; a lone
// expert keeps the base rate. The spread keeps the crowd's approaches
// diverse without touching any other parameter.
double jittered_mutation_rate(double base, int expert, int expert_count);

// The effective GaConfig of expert `expert`: seed mix(master, expert) and
// the jittered mutation rate.
ga::GaConfig expert_config(const CrowdConfig& cfg, int expert);

// Top ceil(elite_fraction * population) individuals by fitness, as placements.
std::vector<Placement> collect_elites(const std::vector<ga::Individual>& population,
                                      double elite_fraction);

struct CrowdResult {
    ga::RunHistory crowd;                 // crowd-level records and the overall best
    std::vector<ga::RunHistory> experts;  // one history per expert
    PermutationPlacement aggregate;       // aggregate_solution over the final consensus
    FitnessBreakdown aggregate_fitness;
    bool best_is_aggregate = false;
};

// Runs E expert populations with derived seeds. Experts evolve independently
// between aggregation barriers; at each barrier the consensus matrix is
// rebuilt from every expert's elites and biases selection and mutation until
// the next barrier. The returned best is the fitness maximum over all expert
// bests and the aggregate solution, ties preferring the aggregate. The
// aggregate's own evaluation is a post-processing step and is not charged to
// the evaluation budget.
CrowdResult run_crowd(Dims dims, const CrowdConfig& cfg);

// Crowd history rows per expert and generation:
// "generation,best_fitness,mean_fitness,best_influence,best_penalty,evaluations,expert_id,barrier_index"
std::string crowd_history_to_csv(const CrowdResult& result, int aggregation_interval);

} // namespace matdom::woc
