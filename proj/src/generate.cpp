#include "matdom/generate.hpp"

#include <algorithm>
#include <numeric>

namespace matdom::gen {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(splitmix64(master) + stream);
}

Instance random_instance(const GenSpec& spec) {
    if (spec.rows < 1 || spec.cols < 1) {
        throw ValidationError("random_instance: dimensions must be positive");
    }
    if (spec.density < 0.0 || spec.density > 1.0) {
        throw ValidationError("random_instance: density must lie in [0,1]");
    }
    Rng rng(spec.seed);
    std::vector<std::uint8_t> entries(static_cast<std::size_t>(spec.rows) * spec.cols, 0);
    for (auto& e : entries) {
        e = rng.bernoulli(spec.density) ? 1 : 0;
    }
    return Instance(spec.rows, spec.cols, std::move(entries));
}

PermutationPlacement random_permutation(int n, Rng& rng) {
    if (n < 1) {
        throw ValidationError("random_permutation: n must be positive");
    }
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = rng.uniform_int(0, i);
        std::swap(cols[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
    }
    return PermutationPlacement(std::move(cols));
}

PermutationPlacement random_permutation(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_permutation(n, rng);
}

Placement random_placement(int rows, int cols, int k, Rng& rng) {
    if (rows < 1 || cols < 1) {
        throw ValidationError("random_placement: dimensions must be positive");
    }
    const int cells = rows * cols;
    if (k < 0 || k > cells) {
        throw ValidationError("random_placement: k must lie in [0, " + std::to_string(cells) +
                              "], got " + std::to_string(k));
    }
    // Partial Fisher-Yates over the flat cell indices.
    std::vector<int> flat(static_cast<std::size_t>(cells));
    std::iota(flat.begin(), flat.end(), 0);
    std::vector<Coord> coords;
    coords.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int j = rng.uniform_int(i, cells - 1);
        std::swap(flat[static_cast<std::size_t>(i)], flat[static_cast<std::size_t>(j)]);
        coords.push_back({flat[static_cast<std::size_t>(i)] / cols,
                          flat[static_cast<std::size_t>(i)] % cols});
    }
    return Placement(std::move(coords));
}

Placement random_placement(int rows, int cols, int k, std::uint64_t seed) {
    Rng rng(seed);
    return random_placement(rows, cols, k, rng);
}

} // namespace matdom::gen
