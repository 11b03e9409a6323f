#pragma once

#include <vector>

#include "matdom/types.hpp"

namespace matdom::woc {

// Per-cell dominator frequency over the contributing elite placements.
// Entries are the exact rationals count/contributors, surfaced as doubles.
class ConsensusMatrix {
  public:
    ConsensusMatrix() = default;
    ConsensusMatrix(int n, std::vector<int> counts, int contributors);

    int n() const { return n_; }
    int contributors() const { return contributors_; }
    int count_at(int row, int col) const {
        return counts_[static_cast<std::size_t>(row) * n_ + col];
    }
    double at(int row, int col) const {
        return static_cast<double>(count_at(row, col)) / contributors_;
    }

  private:
    int n_ = 0;
    int contributors_ = 0;
    std::vector<int> counts_;
};

// F[i][j] = fraction of elites with a dominator at (i, j). All elites must
// live on the same n x n grid.
ConsensusMatrix build_consensus(const std::vector<Placement>& elites, int n);

// Mean consensus frequency over an individual's dominator cells: the
// crowd-agreement score in [0, 1].
double alignment(const PermutationPlacement& individual, const ConsensusMatrix& consensus);
double alignment(const Placement& individual, const ConsensusMatrix& consensus);

// Greedy constrained assignment: repeatedly picks the highest-frequency cell
// whose row and column are both unused (ties lexicographic by (row, col));
// any rows left over take the smallest unused column.
PermutationPlacement aggregate_solution(const ConsensusMatrix& consensus);

} // namespace matdom::woc
