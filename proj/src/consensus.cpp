#include "matdom/consensus.hpp"

#include <algorithm>

#include "matdom/core.hpp"

namespace matdom::woc {

ConsensusMatrix::ConsensusMatrix(int n, std::vector<int> counts, int contributors)
    : n_(n), contributors_(contributors), counts_(std::move(counts)) {
    if (n < 1 || contributors < 1) {
        throw ValidationError("consensus matrix needs a positive size and contributor count");
    }
    if (counts_.size() != static_cast<std::size_t>(n) * n) {
        throw ValidationError("consensus count grid does not match its size");
    }
}

ConsensusMatrix build_consensus(const std::vector<Placement>& elites, int n) {
    if (elites.empty()) {
        throw ValidationError("build_consensus: elite list is empty");
    }
    if (n < 1) {
        throw ValidationError("build_consensus: n must be positive");
    }
    std::vector<int> counts(static_cast<std::size_t>(n) * n, 0);
    for (const Placement& elite : elites) {
        for (Coord c : elite.coords()) {
            if (c.row < 0 || c.row >= n || c.col < 0 || c.col >= n) {
                throw BoundsError("build_consensus: coordinate " + to_string(c) +
                                  " outside the " + std::to_string(n) + "x" + std::to_string(n) +
                                  " grid");
            }
            ++counts[static_cast<std::size_t>(c.row) * n + c.col];
        }
    }
    return ConsensusMatrix(n, std::move(counts), static_cast<int>(elites.size()));
}

double alignment(const Placement& individual, const ConsensusMatrix& consensus) {
    if (individual.empty()) {
        return 0.0;
    }
    for (Coord c : individual.coords()) {
        if (c.row < 0 || c.row >= consensus.n() || c.col < 0 || c.col >= consensus.n()) {
            throw ValidationError("alignment: placement does not fit the consensus grid");
        }
    }
    double sum = 0.0;
    for (Coord c : individual.coords()) {
        sum += consensus.at(c.row, c.col);
    }
    return sum / individual.size();
}

double alignment(const PermutationPlacement& individual, const ConsensusMatrix& consensus) {
    if (individual.size() != consensus.n()) {
        throw ValidationError("alignment: permutation size " + std::to_string(individual.size()) +
                              " does not match consensus size " + std::to_string(consensus.n()));
    }
    double sum = 0.0;
    for (int i = 0; i < individual.size(); ++i) {
        sum += consensus.at(i, individual.col_of(i));
    }
    return sum / individual.size();
}

PermutationPlacement aggregate_solution(const ConsensusMatrix& consensus) {
    const int n = consensus.n();
    struct Cell {
        int count;
        Coord pos;
    };
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            cells.push_back({consensus.count_at(r, c), {r, c}});
        }
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.count != b.count) {
            return a.count > b.count;
        }
        return a.pos < b.pos;
    });
    std::vector<int> assigned(static_cast<std::size_t>(n), -1);
    std::vector<std::uint8_t> col_used(static_cast<std::size_t>(n), 0);
    int picked = 0;
    for (const Cell& cell : cells) {
        if (picked == n) {
            break;
        }
        if (assigned[static_cast<std::size_t>(cell.pos.row)] == -1 &&
            !col_used[static_cast<std::size_t>(cell.pos.col)]) {
            assigned[static_cast<std::size_t>(cell.pos.row)] = cell.pos.col;
            col_used[static_cast<std::size_t>(cell.pos.col)] = 1;
            ++picked;
        }
    }
    // The scan always completes the assignment; repair keeps the contract
    // explicit for any rows that were left over.
    std::vector<Coord> coords;
    for (int r = 0; r < n; ++r) {
        if (assigned[static_cast<std::size_t>(r)] != -1) {
            coords.push_back({r, assigned[static_cast<std::size_t>(r)]});
        }
    }
    return repair(Placement(std::move(coords)), n);
}

} // namespace matdom::woc
