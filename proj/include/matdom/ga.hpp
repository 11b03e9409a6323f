#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matdom/consensus.hpp"
#include "matdom/generate.hpp"
#include "matdom/types.hpp"

namespace matdom::ga {

struct GaConfig {
    int population_size = 100;
    int generations = 300;
    double crossover_rate = 0.9;
    double mutation_rate = 0.2; // per individual
    int tournament_size = 3;
    int elitism_count = 2;
    bool repair_enabled = true;
    DominationModel model = DominationModel::Adjacency;
    std::uint64_t seed = 0;
    // When set: stop once the best individual covers the whole grid and its
    // fitness has stagnated for this many generations.
    std::optional<int> early_stop;

    void validate(Dims dims) const;
};

// Permutation genome under the constraining function, free placement of
// `rows` dominators otherwise.
using Genome = std::variant<PermutationPlacement, Placement>;

Placement genome_placement(const Genome& genome);
int genome_size(const Genome& genome);

struct Individual {
    Genome genome;
    FitnessBreakdown fit;

    bool operator==(const Individual&) const = default;
};

// Fitness context of one optimizer run. The optimizer works on the uniform
// grid of the given dimensions: every cell is territory, so line domination
// is well-defined for any dominator position.
class Evaluator {
  public:
    Evaluator(Dims dims, DominationModel model);

    FitnessBreakdown operator()(const Genome& genome) const;
    Dims dims() const { return board_.dims(); }
    DominationModel model() const { return model_; }
    const Instance& board() const { return board_; }
    // Influence of a placement covering everything the model requires.
    int full_influence() const { return board_.dims().cell_count(); }

  private:
    Instance board_;
    DominationModel model_;
};

struct GenerationStat {
    int generation = 0;
    int best_fitness = 0;
    double mean_fitness = 0.0;
    int best_influence = 0;
    int best_penalty = 0;
    long long evaluations = 0;

    bool operator==(const GenerationStat&) const = default;
};

struct RunHistory {
    std::vector<GenerationStat> records;
    Individual best;
    long long total_evaluations = 0;
    std::int64_t wall_ms = 0;
};

// "generation,best_fitness,mean_fitness,best_influence,best_penalty,evaluations"
std::string history_to_csv(const RunHistory& history);

// --- Operators -------------------------------------------------------------

std::vector<Individual> init_population(Dims dims, const GaConfig& cfg, gen::Rng& rng);

// Samples tournament_size individuals uniformly with replacement; the winner
// maximizes fitness + bias * n * alignment when a consensus is supplied.
// Ties go to the earlier-sampled individual. A tournament at least as large
// as the population degenerates to a full scan and always returns the
// population best.
int tournament_select_index(const std::vector<Individual>& population, int tournament_size,
                            gen::Rng& rng, const woc::ConsensusMatrix* consensus = nullptr,
                            double bias = 0.0);
const Individual& tournament_select(const std::vector<Individual>& population,
                                    int tournament_size, gen::Rng& rng,
                                    const woc::ConsensusMatrix* consensus = nullptr,
                                    double bias = 0.0);

// Cycle crossover: positions are decomposed into the cycles of the pair
// (a, b); each cycle is inherited wholly from one parent by a fair coin
// flip. Every position keeps a value that one of the parents had there, and
// the child is always a valid permutation.
PermutationPlacement crossover_permutation(const PermutationPlacement& a,
                                           const PermutationPlacement& b, gen::Rng& rng);

// Free-placement recombination: the child draws its cells uniformly without
// replacement from the union of both parents' cells.
Placement crossover_free(const Placement& a, const Placement& b, gen::Rng& rng);

// With probability mutation_rate: permutation genomes swap two distinct
// positions (consensus-guided with probability bias when a consensus is
// supplied: the swap maximizing the alignment gain, ties lexicographic);
// free genomes move one random dominator to a random empty cell. The fitness
// cache is refreshed.
Individual mutate(const Individual& individual, double mutation_rate, const Evaluator& eval,
                  gen::Rng& rng, const woc::ConsensusMatrix* consensus = nullptr,
                  double bias = 0.0);

// --- Engine ----------------------------------------------------------------

// One run with one owned random stream. Construction builds and evaluates
// the initial population (generation 0); advance() runs additional
// generations, optionally under a consensus bias. Sequential and
// deterministic per (dims, config).
class GaEngine {
  public:
    GaEngine(Dims dims, GaConfig cfg);

    // Runs up to `generations` more generations; returns how many actually
    // ran (early stop can cut the number short).
    int advance(int generations, const woc::ConsensusMatrix* consensus = nullptr,
                double bias = 0.0);

    bool stopped() const { return stopped_; }
    int generation() const { return generation_; }
    long long evaluations() const { return evaluations_; }
    const std::vector<Individual>& population() const { return population_; }
    const std::vector<GenerationStat>& records() const { return records_; }
    const Evaluator& evaluator() const { return eval_; }
    const GaConfig& config() const { return cfg_; }

    // Best of the current population: maximum fitness, earliest index on ties.
    const Individual& best() const;

    RunHistory history() const;

  private:
    void record_generation();
    Genome spawn_genome(const woc::ConsensusMatrix* consensus, double bias);
    std::vector<int> ranked_indices() const;

    GaConfig cfg_;
    Evaluator eval_;
    gen::Rng rng_;
    std::vector<Individual> population_;
    std::vector<GenerationStat> records_;
    long long evaluations_ = 0;
    int generation_ = 0;
    bool stopped_ = false;
    int best_fitness_seen_ = 0;
    int stagnant_generations_ = 0;
    std::int64_t wall_ms_ = 0;
};

// The generational loop end to end: evaluate, copy elites, refill via
// selection -> crossover -> mutation -> constraining function, repeat.
RunHistory run(Dims dims, const GaConfig& cfg);

} // namespace matdom::ga
