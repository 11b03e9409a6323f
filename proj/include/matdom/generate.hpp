#pragma once

#include <cstdint>
#include <random>

#include "matdom/types.hpp"

namespace matdom::gen {

// splitmix64 finalizer. Used to scramble seeds before they reach the engine
// so that small sequential seeds still start well-mixed streams.
std::uint64_t splitmix64(std::uint64_t x);

// Derives the seed of stream `stream` from a master seed. Distinct streams
// of the same master are independent and reproducible.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream);

// Deterministic random source: mt19937_64 seeded through splitmix64.
// One stream belongs to one logical thread at a time.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    // Uniform double in [0, 1).
    double uniform01() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
    }

    bool bernoulli(double p) { return uniform01() < p; }

  private:
    std::mt19937_64 engine_;
};

struct GenSpec {
    int rows = 0;
    int cols = 0;
    double density = 0.5; // probability of a 1-entry
    std::uint64_t seed = 0;
};

// Each entry is independently 1 with probability spec.density. Same spec,
// same instance.
Instance random_instance(const GenSpec& spec);

// Uniform over all n! permutations (Fisher-Yates); deterministic per seed.
PermutationPlacement random_permutation(int n, std::uint64_t seed);
PermutationPlacement random_permutation(int n, Rng& rng);

// k distinct in-bounds cells, uniform without replacement.
Placement random_placement(int rows, int cols, int k, std::uint64_t seed);
Placement random_placement(int rows, int cols, int k, Rng& rng);

} // namespace matdom::gen
