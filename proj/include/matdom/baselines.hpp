#pragma once

#include "matdom/types.hpp"

namespace matdom::baselines {

// Size caps that keep the exhaustive oracles at desk scale.
struct OracleBudget {
    int max_cells = 25; // cap on the candidate-cell count for subset enumeration
    int max_n = 8;      // cap on n for permutation enumeration
};

// Iteratively adds the cell dominating the maximum number of still-undominated
// cells (ties broken lexicographically by (row, col)) until everything the
// model requires is dominated. Line domination draws candidates from the
// 1-entries; adjacency from the whole grid.
Placement greedy_dominate(const Instance& instance, DominationModel model);

// Minimum-cardinality fully-dominating placement by subset enumeration in
// increasing size, lexicographic within a size; the first feasible set found
// is therefore the lexicographically-least minimum. Throws BudgetError when
// the candidate count exceeds budget.max_cells.
Placement exact_min_dominating(const Instance& instance, DominationModel model,
                               const OracleBudget& budget = {});

struct BestPermutation {
    PermutationPlacement placement;
    int coverage = 0;
};

// Enumerates all n! permutations and returns the adjacency-influence maximum
// (lexicographically-least among ties). Throws BudgetError when n exceeds
// budget.max_n.
BestPermutation exact_best_permutation(int n, const OracleBudget& budget = {});

} // namespace matdom::baselines
