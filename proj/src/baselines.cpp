#include "matdom/baselines.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "matdom/core.hpp"

namespace matdom::baselines {

namespace {

// Candidate cells and, per candidate, the bitmask of required cells it
// dominates. Required cells are indexed by their position in `required`.
struct CoverProblem {
    std::vector<Coord> candidates;
    std::vector<std::uint64_t> dominates; // per candidate
    std::uint64_t full = 0;               // all required cells
};

CoverProblem build_cover_problem(const Instance& instance, DominationModel model) {
    CoverProblem p;
    std::vector<Coord> required;
    if (model == DominationModel::Adjacency) {
        for (int r = 0; r < instance.rows(); ++r) {
            for (int c = 0; c < instance.cols(); ++c) {
                required.push_back({r, c});
            }
        }
        p.candidates = required;
    } else {
        required = instance.one_cells();
        p.candidates = required;
    }
    if (required.size() > 64) {
        throw BudgetError("exhaustive search supports at most 64 required cells, got " +
                          std::to_string(required.size()));
    }
    auto dominated_by = [&](Coord dom, Coord cell) {
        if (model == DominationModel::Line) {
            return dom.row == cell.row || dom.col == cell.col;
        }
        const int dr = dom.row - cell.row;
        const int dc = dom.col - cell.col;
        return (dr == 0 && dc == 0) || (dr == 0 && (dc == 1 || dc == -1)) ||
               (dc == 0 && (dr == 1 || dr == -1));
    };
    p.dominates.resize(p.candidates.size(), 0);
    for (std::size_t i = 0; i < p.candidates.size(); ++i) {
        for (std::size_t j = 0; j < required.size(); ++j) {
            if (dominated_by(p.candidates[i], required[j])) {
                p.dominates[i] |= std::uint64_t{1} << j;
            }
        }
    }
    if (!required.empty()) {
        p.full = (required.size() == 64) ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << required.size()) - 1);
    }
    return p;
}

} // namespace

Placement greedy_dominate(const Instance& instance, DominationModel model) {
    const CoverProblem p = build_cover_problem(instance, model);
    std::uint64_t covered = 0;
    std::vector<Coord> chosen;
    while (covered != p.full) {
        int best = -1;
        int best_gain = 0;
        for (std::size_t i = 0; i < p.candidates.size(); ++i) {
            const int gain = std::popcount(p.dominates[i] & ~covered);
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<int>(i);
            }
        }
        // Candidates are in lexicographic order, so the first maximum wins ties.
        if (best < 0) {
            break; // nothing gains: required set already empty
        }
        chosen.push_back(p.candidates[static_cast<std::size_t>(best)]);
        covered |= p.dominates[static_cast<std::size_t>(best)];
    }
    return Placement(std::move(chosen));
}

Placement exact_min_dominating(const Instance& instance, DominationModel model,
                               const OracleBudget& budget) {
    if (budget.max_cells < 1 || budget.max_n < 1) {
        throw ValidationError("oracle budget caps must be positive");
    }
    const int candidate_count = model == DominationModel::Adjacency
                                    ? instance.dims().cell_count()
                                    : instance.one_count();
    if (candidate_count > budget.max_cells) {
        throw BudgetError("exact_min_dominating: " + std::to_string(candidate_count) +
                          " candidate cells exceed the budget of " +
                          std::to_string(budget.max_cells));
    }
    const CoverProblem p = build_cover_problem(instance, model);
    if (p.full == 0) {
        return Placement{};
    }
    const int m = static_cast<int>(p.candidates.size());
    // Subsets by increasing size, lexicographic within a size; the first hit
    // is the lexicographically-least minimum.
    std::vector<int> pick;
    for (int size = 1; size <= m; ++size) {
        pick.assign(static_cast<std::size_t>(size), 0);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::uint64_t covered = 0;
            for (int idx : pick) {
                covered |= p.dominates[static_cast<std::size_t>(idx)];
            }
            if (covered == p.full) {
                std::vector<Coord> coords;
                coords.reserve(pick.size());
                for (int idx : pick) {
                    coords.push_back(p.candidates[static_cast<std::size_t>(idx)]);
                }
                return Placement(std::move(coords));
            }
            // Advance to the next size-`size` combination.
            int pos = size - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == m - size + pos) {
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++pick[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < size; ++q) {
                pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
            }
        }
    }
    // Unreachable: the all-candidates set always dominates.
    throw std::logic_error("exact_min_dominating: no dominating set found");
}

BestPermutation exact_best_permutation(int n, const OracleBudget& budget) {
    if (n < 1) {
        throw ValidationError("exact_best_permutation: n must be positive");
    }
    if (n > budget.max_n) {
        throw BudgetError("exact_best_permutation: n=" + std::to_string(n) +
                          " exceeds the budget of " + std::to_string(budget.max_n));
    }
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    BestPermutation best;
    best.coverage = -1;
    do {
        const PermutationPlacement perm{std::vector<int>(cols)};
        const int cov = adjacency_coverage({n, n}, perm.to_placement()).count;
        // Lexicographic enumeration + strict improvement keeps the lex-least maximum.
        if (cov > best.coverage) {
            best.coverage = cov;
            best.placement = perm;
        }
    } while (std::next_permutation(cols.begin(), cols.end()));
    return best;
}

} // namespace matdom::baselines
