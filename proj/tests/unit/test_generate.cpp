#include <doctest.h>

#include <map>

#include "matdom/generate.hpp"

using namespace matdom;

TEST_CASE("random_instance honors density extremes and determinism") {
    const Instance zero = gen::random_instance({3, 4, 0.0, 42});
    CHECK(zero.one_count() == 0);

    const Instance one = gen::random_instance({3, 4, 1.0, 42});
    CHECK(one.one_count() == 12);

    const gen::GenSpec spec{5, 7, 0.37, 12345};
    CHECK(gen::random_instance(spec) == gen::random_instance(spec));

    CHECK_THROWS_AS(gen::random_instance({0, 3, 0.5, 1}), ValidationError);
    CHECK_THROWS_AS(gen::random_instance({3, 3, 1.5, 1}), ValidationError);
}

TEST_CASE("random_permutation is valid and deterministic") {
    CHECK(gen::random_permutation(1, 999) == PermutationPlacement({0}));
    CHECK(gen::random_permutation(3, 7) == gen::random_permutation(3, 7));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const PermutationPlacement p = gen::random_permutation(6, seed);
        CHECK(p.size() == 6); // constructor already enforces the invariant
    }
    CHECK_THROWS_AS(gen::random_permutation(0, 1), ValidationError);
}

TEST_CASE("random_permutation is uniform over the 6 permutations of n=3") {
    std::map<std::vector<int>, int> counts;
    const int samples = 60000;
    for (int seed = 0; seed < samples; ++seed) {
        counts[gen::random_permutation(3, static_cast<std::uint64_t>(seed)).cols()]++;
    }
    CHECK(counts.size() == 6);
    for (const auto& [perm, count] : counts) {
        const double freq = static_cast<double>(count) / samples;
        CHECK(freq > 1.0 / 6.0 - 0.02);
        CHECK(freq < 1.0 / 6.0 + 0.02);
    }
}

TEST_CASE("random_placement draws k distinct cells") {
    CHECK(gen::random_placement(3, 3, 0, 5).empty());
    CHECK(gen::random_placement(2, 3, 6, 5).size() == 6); // all cells

    const Placement a = gen::random_placement(4, 5, 7, 77);
    CHECK(a == gen::random_placement(4, 5, 7, 77));
    CHECK(a.size() == 7); // Placement construction rejects duplicates

    CHECK_THROWS_AS(gen::random_placement(2, 2, 5, 1), ValidationError);
}

TEST_CASE("derived stream seeds differ per stream and stay reproducible") {
    const std::uint64_t master = 99;
    CHECK(gen::mix_seed(master, 0) != gen::mix_seed(master, 1));
    CHECK(gen::mix_seed(master, 3) == gen::mix_seed(master, 3));
    CHECK(gen::mix_seed(master, 0) != gen::mix_seed(master + 1, 0));
}
