#pragma once

#include "matdom/types.hpp"

// All operations here are pure functions of their inputs and can be called
// from any number of threads concurrently.

namespace matdom {

// Materializes the solution matrix S of a placement: S[i][j] = 1 iff a
// dominator sits at (i, j). Throws BoundsError naming the first offending
// coordinate.
BinaryGrid occupancy(const Placement& placement, Dims dims);

// Coverage under adjacency domination: a cell is covered when it holds a
// dominator or is orthogonally adjacent to one. Counts covered cells over
// the whole grid.
Coverage adjacency_coverage(Dims dims, const Placement& placement);

// Coverage under line domination: a 1-entry is covered when it shares a row
// or column with a dominator (a dominator covers itself). Dominators must
// sit on 1-entries; the mask is over the whole grid but only 1-entries are
// ever marked, and count counts covered 1-entries.
Coverage line_coverage(const Instance& instance, const Placement& placement);

// P = 10 * (#rows whose entry sum != 1 + #columns whose entry sum != 1).
// Zero exactly on permutation-occupancy matrices.
int penalty(const BinaryGrid& solution);

// Influence I: coverage count under the selected model. Line domination
// needs the instance for its 1-entry pattern.
int influence(Dims dims, const Placement& placement, DominationModel model);
int influence(const Instance& instance, const Placement& placement, DominationModel model);

// Full breakdown: I = influence, P = penalty(occupancy), f = I - P.
FitnessBreakdown fitness(Dims dims, const Placement& placement, DominationModel model);
FitnessBreakdown fitness(const Instance& instance, const Placement& placement,
                         DominationModel model);

// Deterministic projection of an arbitrary placement onto a permutation
// placement on an n x n grid. Scans rows in order keeping the
// lexicographically-first dominator whose column is still unused; rows left
// empty are then assigned the smallest unused column, in row order.
// Idempotent: a valid permutation comes back unchanged.
PermutationPlacement repair(const Placement& placement, int n);
PermutationPlacement repair(const BinaryGrid& solution);

} // namespace matdom
