#include "matdom/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <numeric>

#include "matdom/core.hpp"

namespace matdom::ga {

namespace {

std::string format_mean(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

GaConfig validated(GaConfig cfg, Dims dims) {
    cfg.validate(dims);
    return cfg;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

double crowd_score(const Individual& ind, const woc::ConsensusMatrix* consensus, double bias) {
    double score = ind.fit.fitness;
    if (consensus != nullptr) {
        const double align = std::holds_alternative<PermutationPlacement>(ind.genome)
                                 ? woc::alignment(std::get<PermutationPlacement>(ind.genome),
                                                  *consensus)
                                 : woc::alignment(std::get<Placement>(ind.genome), *consensus);
        score += bias * consensus->n() * align;
    }
    return score;
}

// Applies the mutation step to a genome; the caller refreshes the fitness.
Genome mutate_genome(Genome genome, double mutation_rate, const Evaluator& eval, gen::Rng& rng,
                     const woc::ConsensusMatrix* consensus, double bias) {
    if (!rng.bernoulli(mutation_rate)) {
        return genome;
    }
    if (std::holds_alternative<PermutationPlacement>(genome)) {
        const auto& perm = std::get<PermutationPlacement>(genome);
        const int n = perm.size();
        if (n < 2) {
            return genome; // no valid swap exists
        }
        int i = -1;
        int j = -1;
        // The bias gate draws only when a consensus can actually steer the
        // swap, so a zero-bias run consumes the same stream as a plain one.
        if (consensus != nullptr && bias > 0.0 && rng.bernoulli(bias)) {
            if (consensus->n() != n) {
                throw ValidationError("consensus size does not match the genome");
            }
            // Swap maximizing the consensus alignment gain, ties lexicographic.
            // Counts order identically to frequencies (same denominator).
            int best_gain = std::numeric_limits<int>::min();
            for (int bi = 0; bi < n; ++bi) {
                for (int bj = bi + 1; bj < n; ++bj) {
                    const int gain = consensus->count_at(bi, perm.col_of(bj)) +
                                     consensus->count_at(bj, perm.col_of(bi)) -
                                     consensus->count_at(bi, perm.col_of(bi)) -
                                     consensus->count_at(bj, perm.col_of(bj));
                    if (gain > best_gain) {
                        best_gain = gain;
                        i = bi;
                        j = bj;
                    }
                }
            }
        } else {
            i = rng.uniform_int(0, n - 1);
            j = rng.uniform_int(0, n - 2);
            if (j >= i) {
                ++j;
            }
        }
        std::vector<int> cols = perm.cols();
        std::swap(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
        return PermutationPlacement(std::move(cols));
    }

    const auto& cells = std::get<Placement>(genome);
    const Dims dims = eval.dims();
    const int k = cells.size();
    const int total = dims.cell_count();
    if (k == 0 || k == total) {
        return genome;
    }
    const int mover = rng.uniform_int(0, k - 1);
    const int target_rank = rng.uniform_int(0, total - k - 1);
    std::vector<std::uint8_t> occupied(static_cast<std::size_t>(total), 0);
    for (Coord c : cells.coords()) {
        occupied[static_cast<std::size_t>(c.row) * dims.cols + c.col] = 1;
    }
    Coord target{};
    int rank = 0;
    for (int flat = 0; flat < total; ++flat) {
        if (!occupied[static_cast<std::size_t>(flat)]) {
            if (rank == target_rank) {
                target = {flat / dims.cols, flat % dims.cols};
                break;
            }
            ++rank;
        }
    }
    std::vector<Coord> coords = cells.coords();
    coords[static_cast<std::size_t>(mover)] = target;
    return Placement(std::move(coords));
}

} // namespace

void GaConfig::validate(Dims dims) const {
    if (dims.rows < 1 || dims.cols < 1) {
        throw ConfigError("grid dimensions must be positive");
    }
    if (population_size < 1) {
        throw ConfigError("population_size must be positive");
    }
    if (generations < 0) {
        throw ConfigError("generations must be non-negative");
    }
    if (crossover_rate < 0.0 || crossover_rate > 1.0) {
        throw ConfigError("crossover_rate must lie in [0,1]");
    }
    if (mutation_rate < 0.0 || mutation_rate > 1.0) {
        throw ConfigError("mutation_rate must lie in [0,1]");
    }
    if (tournament_size < 1) {
        throw ConfigError("tournament_size must be at least 1");
    }
    if (elitism_count < 0 || elitism_count > population_size) {
        throw ConfigError("elitism_count must lie in [0, population_size]");
    }
    if (repair_enabled && dims.rows != dims.cols) {
        throw ConfigError("the permutation representation needs a square grid; got " +
                          std::to_string(dims.rows) + "x" + std::to_string(dims.cols));
    }
    if (early_stop && *early_stop < 1) {
        throw ConfigError("early_stop stagnation window must be at least 1");
    }
}

Placement genome_placement(const Genome& genome) {
    if (std::holds_alternative<PermutationPlacement>(genome)) {
        return std::get<PermutationPlacement>(genome).to_placement();
    }
    return std::get<Placement>(genome);
}

int genome_size(const Genome& genome) {
    if (std::holds_alternative<PermutationPlacement>(genome)) {
        return std::get<PermutationPlacement>(genome).size();
    }
    return std::get<Placement>(genome).size();
}

Evaluator::Evaluator(Dims dims, DominationModel model)
    : board_(Instance::ones(dims.rows, dims.cols)), model_(model) {}

FitnessBreakdown Evaluator::operator()(const Genome& genome) const {
    return fitness(board_, genome_placement(genome), model_);
}

std::string history_to_csv(const RunHistory& history) {
    std::string out =
        "generation,best_fitness,mean_fitness,best_influence,best_penalty,evaluations\n";
    for (const GenerationStat& rec : history.records) {
        out += std::to_string(rec.generation) + ',' + std::to_string(rec.best_fitness) + ',' +
               format_mean(rec.mean_fitness) + ',' + std::to_string(rec.best_influence) + ',' +
               std::to_string(rec.best_penalty) + ',' + std::to_string(rec.evaluations) + '\n';
    }
    return out;
}

std::vector<Individual> init_population(Dims dims, const GaConfig& cfg, gen::Rng& rng) {
    cfg.validate(dims);
    const Evaluator eval(dims, cfg.model);
    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i) {
        Genome genome;
        if (cfg.repair_enabled) {
            genome = gen::random_permutation(dims.rows, rng);
        } else {
            genome = gen::random_placement(dims.rows, dims.cols, dims.rows, rng);
        }
        FitnessBreakdown fit = eval(genome);
        population.push_back({std::move(genome), fit});
    }
    return population;
}

int tournament_select_index(const std::vector<Individual>& population, int tournament_size,
                            gen::Rng& rng, const woc::ConsensusMatrix* consensus, double bias) {
    if (population.empty()) {
        throw ValidationError("tournament over an empty population");
    }
    if (tournament_size < 1) {
        throw ValidationError("tournament_size must be at least 1");
    }
    const int n = static_cast<int>(population.size());
    if (tournament_size >= n) {
        // Degenerate tournament: everyone competes, the global best wins.
        int winner = 0;
        double best = crowd_score(population[0], consensus, bias);
        for (int idx = 1; idx < n; ++idx) {
            const double score = crowd_score(population[static_cast<std::size_t>(idx)], consensus,
                                             bias);
            if (score > best) {
                best = score;
                winner = idx;
            }
        }
        return winner;
    }
    int winner = rng.uniform_int(0, n - 1);
    double best = crowd_score(population[static_cast<std::size_t>(winner)], consensus, bias);
    for (int k = 1; k < tournament_size; ++k) {
        const int idx = rng.uniform_int(0, n - 1);
        const double score = crowd_score(population[static_cast<std::size_t>(idx)], consensus,
                                         bias);
        if (score > best) {
            best = score;
            winner = idx;
        }
    }
    return winner;
}

const Individual& tournament_select(const std::vector<Individual>& population, int tournament_size,
                                    gen::Rng& rng, const woc::ConsensusMatrix* consensus,
                                    double bias) {
    return population[static_cast<std::size_t>(
        tournament_select_index(population, tournament_size, rng, consensus, bias))];
}

PermutationPlacement crossover_permutation(const PermutationPlacement& a,
                                           const PermutationPlacement& b, gen::Rng& rng) {
    const int n = a.size();
    if (b.size() != n) {
        throw ValidationError("crossover parents differ in length: " + std::to_string(n) +
                              " vs " + std::to_string(b.size()));
    }
    std::vector<int> pos_in_a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pos_in_a[static_cast<std::size_t>(a.col_of(i))] = i;
    }
    std::vector<int> child(static_cast<std::size_t>(n), -1);
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(n), 0);
    std::vector<int> cycle;
    for (int start = 0; start < n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) {
            continue;
        }
        cycle.clear();
        int cur = start;
        while (!visited[static_cast<std::size_t>(cur)]) {
            visited[static_cast<std::size_t>(cur)] = 1;
            cycle.push_back(cur);
            cur = pos_in_a[static_cast<std::size_t>(b.col_of(cur))];
        }
        const bool from_a = rng.bernoulli(0.5);
        for (int idx : cycle) {
            child[static_cast<std::size_t>(idx)] = from_a ? a.col_of(idx) : b.col_of(idx);
        }
    }
    return PermutationPlacement(std::move(child));
}

Placement crossover_free(const Placement& a, const Placement& b, gen::Rng& rng) {
    if (a.size() != b.size()) {
        throw ValidationError("crossover parents differ in size");
    }
    std::vector<Coord> pool;
    pool.reserve(static_cast<std::size_t>(a.size() + b.size()));
    std::set_union(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end(),
                   std::back_inserter(pool));
    const int k = a.size();
    for (int i = 0; i < k; ++i) {
        const int j = rng.uniform_int(i, static_cast<int>(pool.size()) - 1);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return Placement(std::move(pool));
}

Individual mutate(const Individual& individual, double mutation_rate, const Evaluator& eval,
                  gen::Rng& rng, const woc::ConsensusMatrix* consensus, double bias) {
    Genome genome = mutate_genome(individual.genome, mutation_rate, eval, rng, consensus, bias);
    FitnessBreakdown fit = eval(genome);
    return {std::move(genome), fit};
}

GaEngine::GaEngine(Dims dims, GaConfig cfg)
    : cfg_(validated(std::move(cfg), dims)), eval_(dims, cfg_.model), rng_(cfg_.seed) {
    const auto start = std::chrono::steady_clock::now();
    population_ = init_population(dims, cfg_, rng_);
    evaluations_ += cfg_.population_size;
    record_generation();
    best_fitness_seen_ = best().fit.fitness;
    wall_ms_ += elapsed_ms(start);
}

const Individual& GaEngine::best() const {
    const Individual* winner = &population_.front();
    for (const Individual& ind : population_) {
        if (ind.fit.fitness > winner->fit.fitness) {
            winner = &ind;
        }
    }
    return *winner;
}

std::vector<int> GaEngine::ranked_indices() const {
    std::vector<int> order(population_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return population_[static_cast<std::size_t>(lhs)].fit.fitness >
               population_[static_cast<std::size_t>(rhs)].fit.fitness;
    });
    return order;
}

Genome GaEngine::spawn_genome(const woc::ConsensusMatrix* consensus, double bias) {
    Genome child;
    if (rng_.bernoulli(cfg_.crossover_rate)) {
        const Individual& pa = tournament_select(population_, cfg_.tournament_size, rng_,
                                                 consensus, bias);
        const Individual& pb = tournament_select(population_, cfg_.tournament_size, rng_,
                                                 consensus, bias);
        if (std::holds_alternative<PermutationPlacement>(pa.genome)) {
            child = crossover_permutation(std::get<PermutationPlacement>(pa.genome),
                                          std::get<PermutationPlacement>(pb.genome), rng_);
        } else {
            child = crossover_free(std::get<Placement>(pa.genome), std::get<Placement>(pb.genome),
                                   rng_);
        }
    } else {
        child = tournament_select(population_, cfg_.tournament_size, rng_, consensus, bias).genome;
    }
    child = mutate_genome(std::move(child), cfg_.mutation_rate, eval_, rng_, consensus, bias);
    if (cfg_.repair_enabled) {
        child = repair(genome_placement(child), eval_.dims().rows);
    }
    return child;
}

int GaEngine::advance(int generations, const woc::ConsensusMatrix* consensus, double bias) {
    const auto start = std::chrono::steady_clock::now();
    int completed = 0;
    for (int g = 0; g < generations && !stopped_; ++g) {
        std::vector<Individual> next;
        next.reserve(population_.size());
        const std::vector<int> ranked = ranked_indices();
        // Elite copies are re-evaluated so every next-generation slot costs
        // exactly one evaluation; the budget accounting stays exact.
        for (int e = 0; e < cfg_.elitism_count; ++e) {
            const int idx = ranked[static_cast<std::size_t>(e)];
            Individual elite = population_[static_cast<std::size_t>(idx)];
            elite.fit = eval_(elite.genome);
            ++evaluations_;
            next.push_back(std::move(elite));
        }
        while (static_cast<int>(next.size()) < cfg_.population_size) {
            Genome genome = spawn_genome(consensus, bias);
            FitnessBreakdown fit = eval_(genome);
            ++evaluations_;
            next.push_back({std::move(genome), fit});
        }
        population_ = std::move(next);
        ++generation_;
        record_generation();
        ++completed;

        const Individual& current = best();
        if (current.fit.fitness > best_fitness_seen_) {
            best_fitness_seen_ = current.fit.fitness;
            stagnant_generations_ = 0;
        } else {
            ++stagnant_generations_;
        }
        if (cfg_.early_stop && current.fit.influence == eval_.full_influence() &&
            stagnant_generations_ >= *cfg_.early_stop) {
            stopped_ = true;
        }
    }
    wall_ms_ += elapsed_ms(start);
    return completed;
}

void GaEngine::record_generation() {
    const Individual& top = best();
    long long sum = 0;
    for (const Individual& ind : population_) {
        sum += ind.fit.fitness;
    }
    GenerationStat rec;
    rec.generation = generation_;
    rec.best_fitness = top.fit.fitness;
    rec.mean_fitness = static_cast<double>(sum) / static_cast<double>(population_.size());
    rec.best_influence = top.fit.influence;
    rec.best_penalty = top.fit.penalty;
    rec.evaluations = evaluations_;
    records_.push_back(rec);
}

RunHistory GaEngine::history() const {
    RunHistory h;
    h.records = records_;
    h.best = best();
    h.total_evaluations = evaluations_;
    h.wall_ms = wall_ms_;
    return h;
}

RunHistory run(Dims dims, const GaConfig& cfg) {
    GaEngine engine(dims, cfg);
    engine.advance(cfg.generations);
    return engine.history();
}

} // namespace matdom::ga
