#include <doctest.h>

#include <algorithm>
#include <vector>

#include "matdom/core.hpp"
#include "matdom/generate.hpp"
#include "matdom/verify.hpp"

using namespace matdom;

namespace {

// Definitional coverage check, independent of the library path: a cell is
// adjacency-dominated when the placement contains it or an orthogonal
// neighbour.
bool def_adjacency_covered(const std::vector<Coord>& doms, Coord cell) {
    for (Coord d : doms) {
        const int dr = d.row - cell.row;
        const int dc = d.col - cell.col;
        if ((dr == 0 && dc == 0) || (dr == 0 && (dc == 1 || dc == -1)) ||
            (dc == 0 && (dr == 1 || dr == -1))) {
            return true;
        }
    }
    return false;
}

int def_adjacency_count(Dims dims, const std::vector<Coord>& doms) {
    int count = 0;
    for (int r = 0; r < dims.rows; ++r) {
        for (int c = 0; c < dims.cols; ++c) {
            if (def_adjacency_covered(doms, {r, c})) {
                ++count;
            }
        }
    }
    return count;
}

// Definitional certificate check re-deriving everything cell by cell.
bool def_verify(const Instance& inst, const std::vector<Coord>& doms, int k,
                DominationModel model) {
    if (static_cast<int>(doms.size()) > k) {
        return false;
    }
    for (Coord d : doms) {
        if (d.row < 0 || d.row >= inst.rows() || d.col < 0 || d.col >= inst.cols()) {
            return false;
        }
        if (model == DominationModel::Line && !inst.at(d.row, d.col)) {
            return false;
        }
    }
    for (int r = 0; r < inst.rows(); ++r) {
        for (int c = 0; c < inst.cols(); ++c) {
            if (model == DominationModel::Line) {
                if (!inst.at(r, c)) {
                    continue;
                }
                bool covered = false;
                for (Coord d : doms) {
                    if (d.row == r || d.col == c) {
                        covered = true;
                        break;
                    }
                }
                if (!covered) {
                    return false;
                }
            } else if (!def_adjacency_covered(doms, {r, c})) {
                return false;
            }
        }
    }
    return true;
}

Placement pl(std::vector<Coord> coords) { return Placement(std::move(coords)); }

Instance identity3() {
    return Instance(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
}

// The 8 symmetries of an n x n grid.
std::vector<Coord (*)(Coord, int)> square_symmetries() {
    return {
        [](Coord c, int) { return c; },
        [](Coord c, int n) { return Coord{c.col, n - 1 - c.row}; },
        [](Coord c, int n) { return Coord{n - 1 - c.row, n - 1 - c.col}; },
        [](Coord c, int n) { return Coord{n - 1 - c.col, c.row}; },
        [](Coord c, int n) { return Coord{c.row, n - 1 - c.col}; },
        [](Coord c, int n) { return Coord{n - 1 - c.row, c.col}; },
        [](Coord c, int) { return Coord{c.col, c.row}; },
        [](Coord c, int n) { return Coord{n - 1 - c.col, n - 1 - c.row}; },
    };
}

} // namespace

TEST_CASE("occupancy materializes the solution matrix") {
    CHECK(occupancy(Placement{}, {2, 2}).cells == std::vector<std::uint8_t>{0, 0, 0, 0});
    CHECK(occupancy(pl({{0, 0}}), {1, 1}).cells == std::vector<std::uint8_t>{1});
    // pure function: identical output on repeat calls
    const Placement p = pl({{0, 0}});
    CHECK(occupancy(p, {1, 1}) == occupancy(p, {1, 1}));
}

TEST_CASE("occupancy rejects out-of-bounds coordinates by name") {
    try {
        occupancy(pl({{2, 0}}), {2, 2});
        FAIL("expected BoundsError");
    } catch (const BoundsError& e) {
        CHECK(std::string(e.what()).find("(2,0)") != std::string::npos);
    }
}

TEST_CASE("adjacency coverage counts the cross around each dominator") {
    const Coverage center = adjacency_coverage({3, 3}, pl({{1, 1}}));
    CHECK(center.count == 5);

    const Coverage corner = adjacency_coverage({2, 2}, pl({{0, 0}}));
    CHECK(corner.count == 3);
    CHECK(corner.mask.at(1, 1) == 0); // diagonal neighbour is not covered

    const Coverage diag = adjacency_coverage({3, 3}, pl({{0, 0}, {1, 1}, {2, 2}}));
    CHECK(diag.count == 7);
    CHECK(diag.mask.at(0, 2) == 0);
    CHECK(diag.mask.at(2, 0) == 0);
}

TEST_CASE("adjacency coverage agrees with the definitional oracle") {
    gen::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = rng.uniform_int(1, 6);
        const int cols = rng.uniform_int(1, 6);
        const int k = rng.uniform_int(0, rows * cols);
        const Placement p = gen::random_placement(rows, cols, k, rng);
        const Coverage cov = adjacency_coverage({rows, cols}, p);
        CHECK(cov.count == def_adjacency_count({rows, cols}, p.coords()));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                CHECK(static_cast<bool>(cov.mask.at(r, c)) ==
                      def_adjacency_covered(p.coords(), {r, c}));
            }
        }
    }
}

TEST_CASE("adjacency coverage is invariant under the 8 square symmetries") {
    gen::Rng rng(11);
    const auto transforms = square_symmetries();
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.uniform_int(1, 6);
        const int k = rng.uniform_int(0, n * n);
        const Placement p = gen::random_placement(n, n, k, rng);
        const Coverage base = adjacency_coverage({n, n}, p);
        for (auto* t : transforms) {
            std::vector<Coord> mapped;
            for (Coord c : p.coords()) {
                mapped.push_back(t(c, n));
            }
            const Coverage moved = adjacency_coverage({n, n}, Placement(mapped));
            CHECK(moved.count == base.count);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    const Coord m = t({r, c}, n);
                    CHECK(moved.mask.at(m.row, m.col) == base.mask.at(r, c));
                }
            }
        }
    }
}

TEST_CASE("line coverage over the 1-entries") {
    const Instance id3 = identity3();
    CHECK(line_coverage(id3, pl({{0, 0}, {1, 1}, {2, 2}})).count == 3);
    CHECK(line_coverage(id3, pl({{0, 0}})).count == 1);

    const Instance ones2 = Instance::ones(2, 2);
    const Coverage c = line_coverage(ones2, pl({{0, 0}}));
    CHECK(c.count == 3);
    CHECK(c.mask.at(1, 1) == 0);
}

TEST_CASE("line coverage rejects dominators on 0-entries") {
    CHECK_THROWS_AS(line_coverage(identity3(), pl({{0, 1}})), ModelViolationError);
}

TEST_CASE("penalty follows the scaled row/column-sum rule") {
    // permutation occupancy: every row and column sums to 1
    BinaryGrid perm({4, 4});
    perm.set(0, 2, 1);
    perm.set(1, 0, 1);
    perm.set(2, 3, 1);
    perm.set(3, 1, 1);
    CHECK(penalty(perm) == 0);

    CHECK(penalty(BinaryGrid({3, 3})) == 60); // all rows and columns violate

    BinaryGrid g({2, 2});
    g.set(0, 0, 1);
    g.set(0, 1, 1);
    CHECK(penalty(g) == 20); // both rows violate, no column does
}

TEST_CASE("penalty rejects non-binary matrices") {
    BinaryGrid g({1, 1});
    g.cells[0] = 2;
    CHECK_THROWS_AS(penalty(g), ValidationError);
}

TEST_CASE("penalty applies to rectangular matrices") {
    CHECK(penalty(BinaryGrid({2, 3})) == 50); // 2 rows + 3 columns violate
    BinaryGrid g({2, 3});
    g.set(0, 0, 1);
    g.set(1, 1, 1);
    CHECK(penalty(g) == 10); // only column 2 violates
}

TEST_CASE("domain types enforce their invariants on construction") {
    CHECK_THROWS_AS(PermutationPlacement({0, 0}), ValidationError);
    CHECK_THROWS_AS(PermutationPlacement({0, 2}), ValidationError);
    CHECK_THROWS_AS(Instance(2, 2, {0, 1, 2, 0}), ValidationError);
    CHECK_THROWS_AS(Instance(0, 2, {}), ValidationError);
    CHECK_THROWS_AS(Placement({{0, 0}, {0, 0}}), ValidationError);
    CHECK_THROWS_AS(verify_certificate({Instance::ones(2, 2), Placement{}, -1,
                                        DominationModel::Line}),
                    ValidationError);
}

TEST_CASE("line influence needs an instance and follows the 1-entry pattern") {
    const Instance id3 = identity3();
    CHECK(influence(id3, pl({{0, 0}, {1, 1}, {2, 2}}), DominationModel::Line) == 3);
    CHECK_THROWS_AS(influence(Dims{3, 3}, pl({{0, 0}}), DominationModel::Line),
                    ValidationError);
    const FitnessBreakdown fb = fitness(id3, pl({{0, 0}}), DominationModel::Line);
    CHECK(fb.influence == 1);
    CHECK(fb.penalty == 10 * (2 + 2)); // rows 1,2 and columns 1,2 sum to 0
    CHECK(fb.fitness == 1 - 40);
}

TEST_CASE("penalty is zero exactly on permutation occupancies") {
    gen::Rng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.uniform_int(1, 5);
        const int k = rng.uniform_int(0, n * n);
        const Placement p = gen::random_placement(n, n, k, rng);
        const BinaryGrid occ = occupancy(p, {n, n});
        bool is_perm = true;
        for (int r = 0; r < n; ++r) {
            int row_sum = 0;
            int col_sum = 0;
            for (int c = 0; c < n; ++c) {
                row_sum += occ.at(r, c);
                col_sum += occ.at(c, r);
            }
            if (row_sum != 1 || col_sum != 1) {
                is_perm = false;
            }
        }
        CHECK((penalty(occ) == 0) == is_perm);
        CHECK(penalty(occ) % 10 == 0);
    }
}

TEST_CASE("influence counts model coverage") {
    CHECK(influence(Dims{1, 1}, pl({{0, 0}}), DominationModel::Adjacency) == 1);
    CHECK(influence(Dims{3, 3}, pl({{1, 1}}), DominationModel::Adjacency) == 5);

    // brute force over all 3! permutations: 9 is attainable and maximal
    std::vector<int> cols{0, 1, 2};
    int best = 0;
    do {
        std::vector<Coord> coords;
        for (int i = 0; i < 3; ++i) {
            coords.push_back({i, cols[static_cast<std::size_t>(i)]});
        }
        best = std::max(best, def_adjacency_count({3, 3}, coords));
    } while (std::next_permutation(cols.begin(), cols.end()));
    CHECK(best == 9);
    CHECK(influence(Dims{3, 3}, PermutationPlacement({1, 2, 0}).to_placement(),
                    DominationModel::Adjacency) == 9);
}

TEST_CASE("influence respects per-dominator bounds") {
    gen::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = rng.uniform_int(1, 6);
        const int cols = rng.uniform_int(1, 6);
        const int k = rng.uniform_int(0, rows * cols);
        const Placement p = gen::random_placement(rows, cols, k, rng);
        const int inf = influence(Dims{rows, cols}, p, DominationModel::Adjacency);
        CHECK(inf >= 0);
        CHECK(inf <= rows * cols);
        CHECK(inf <= 5 * k); // each dominator adds at most 5 newly covered cells
    }
}

TEST_CASE("fitness is influence minus penalty") {
    const FitnessBreakdown unit = fitness(Dims{1, 1}, pl({{0, 0}}), DominationModel::Adjacency);
    CHECK(unit == FitnessBreakdown{1, 0, 1});

    const FitnessBreakdown center = fitness(Dims{3, 3}, pl({{1, 1}}), DominationModel::Adjacency);
    CHECK(center.influence == 5);
    CHECK(center.penalty == 40);
    CHECK(center.fitness == -35);

    const FitnessBreakdown perm = fitness(Dims{3, 3}, PermutationPlacement({1, 2, 0}).to_placement(),
                                          DominationModel::Adjacency);
    CHECK(perm == FitnessBreakdown{9, 0, 9});
}

TEST_CASE("fitness identity holds on random placements") {
    gen::Rng rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform_int(1, 6);
        const int k = rng.uniform_int(0, n * n);
        const Placement p = gen::random_placement(n, n, k, rng);
        const FitnessBreakdown fb = fitness(Dims{n, n}, p, DominationModel::Adjacency);
        CHECK(fb.fitness == fb.influence - fb.penalty);
        CHECK(fb.influence == influence(Dims{n, n}, p, DominationModel::Adjacency));
        CHECK(fb.penalty == penalty(occupancy(p, {n, n})));
    }
}

TEST_CASE("verify_certificate on the worked examples") {
    const Instance id3 = identity3();
    CHECK(verify_certificate({id3, pl({{0, 0}, {1, 1}, {2, 2}}), 3, DominationModel::Line})
              .accepted);

    const Verdict rejected = verify_certificate({id3, pl({{0, 0}}), 1, DominationModel::Line});
    CHECK(!rejected.accepted);
    CHECK(rejected.reason.find("(1,1)") != std::string::npos);

    const Instance ones3 = Instance::ones(3, 3);
    CHECK(verify_certificate({ones3, pl({{0, 0}, {0, 1}, {0, 2}}), 3, DominationModel::Line})
              .accepted);
}

TEST_CASE("verify_certificate agrees with the definitional checker") {
    gen::Rng rng(2024);
    int accepted = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int rows = rng.uniform_int(1, 6);
        const int cols = rng.uniform_int(1, 6);
        gen::GenSpec spec{rows, cols, rng.uniform_int(0, 100) / 100.0, rng.next_u64()};
        const Instance inst = gen::random_instance(spec);
        const DominationModel model =
            rng.bernoulli(0.5) ? DominationModel::Line : DominationModel::Adjacency;

        // Mix in-bounds candidates with occasional 1-entry-only candidates so
        // both accept and reject paths occur.
        std::vector<Coord> doms;
        if (model == DominationModel::Line && rng.bernoulli(0.6)) {
            for (Coord c : inst.one_cells()) {
                if (rng.bernoulli(0.5)) {
                    doms.push_back(c);
                }
            }
        } else {
            const int k = rng.uniform_int(0, std::min(6, rows * cols));
            doms = gen::random_placement(rows, cols, k, rng).coords();
        }
        const int bound = rng.uniform_int(0, static_cast<int>(doms.size()) + 2);

        const Verdict v = verify_certificate({inst, Placement(doms), bound, model});
        CHECK(v.accepted == def_verify(inst, doms, bound, model));
        accepted += v.accepted ? 1 : 0;
    }
    CHECK(accepted > 0);
    CHECK(accepted < 1000);
}

TEST_CASE("repair keeps valid permutations and fills gaps deterministically") {
    // already a permutation: unchanged
    const PermutationPlacement p({2, 0, 3, 1});
    CHECK(repair(p.to_placement(), 4) == p);

    // empty placement: smallest unused column per row
    CHECK(repair(Placement{}, 2) == PermutationPlacement({0, 1}));

    // [[1,1],[0,0]]: keep (0,0); row 1 gets column 1
    CHECK(repair(pl({{0, 0}, {0, 1}}), 2) == PermutationPlacement({0, 1}));

    BinaryGrid g({2, 2});
    g.set(0, 0, 1);
    g.set(0, 1, 1);
    CHECK(repair(g) == PermutationPlacement({0, 1}));
}

TEST_CASE("repair is idempotent and always feasible") {
    gen::Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = rng.uniform_int(1, 7);
        const int k = rng.uniform_int(0, n * n);
        const Placement p = gen::random_placement(n, n, k, rng);
        const PermutationPlacement fixed = repair(p, n);
        CHECK(penalty(occupancy(fixed.to_placement(), {n, n})) == 0);
        CHECK(repair(fixed.to_placement(), n) == fixed);
    }
}
