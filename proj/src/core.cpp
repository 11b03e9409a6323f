#include "matdom/core.hpp"

#include <algorithm>

namespace matdom {

std::string to_string(Coord c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

const char* to_string(DominationModel model) {
    return model == DominationModel::Line ? "line" : "adjacency";
}

DominationModel parse_model(std::string_view name) {
    if (name == "line") {
        return DominationModel::Line;
    }
    if (name == "adjacency") {
        return DominationModel::Adjacency;
    }
    throw ValidationError("unknown domination model: " + std::string(name));
}

Instance::Instance(int rows, int cols, std::vector<std::uint8_t> entries)
    : dims_{rows, cols}, entries_(std::move(entries)) {
    if (rows < 1 || cols < 1) {
        throw ValidationError("instance dimensions must be positive, got " +
                              std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw ValidationError("instance entry count does not match dimensions");
    }
    for (std::uint8_t v : entries_) {
        if (v != 0 && v != 1) {
            throw ValidationError("instance entries must be 0 or 1");
        }
    }
}

Instance Instance::zeros(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw ValidationError("instance dimensions must be positive");
    }
    return Instance(rows, cols, std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 0));
}

Instance Instance::ones(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw ValidationError("instance dimensions must be positive");
    }
    return Instance(rows, cols, std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 1));
}

int Instance::one_count() const {
    int count = 0;
    for (std::uint8_t v : entries_) {
        count += v;
    }
    return count;
}

std::vector<Coord> Instance::one_cells() const {
    std::vector<Coord> cells;
    for (int r = 0; r < dims_.rows; ++r) {
        for (int c = 0; c < dims_.cols; ++c) {
            if (at(r, c)) {
                cells.push_back({r, c});
            }
        }
    }
    return cells;
}

Placement::Placement(std::vector<Coord> coords) : coords_(std::move(coords)) {
    std::sort(coords_.begin(), coords_.end());
    auto dup = std::adjacent_find(coords_.begin(), coords_.end());
    if (dup != coords_.end()) {
        throw ValidationError("duplicate coordinate " + to_string(*dup) + " in placement");
    }
}

bool Placement::contains(Coord c) const {
    return std::binary_search(coords_.begin(), coords_.end(), c);
}

PermutationPlacement::PermutationPlacement(std::vector<int> cols) : cols_(std::move(cols)) {
    const int n = static_cast<int>(cols_.size());
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    for (int c : cols_) {
        if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) {
            throw ValidationError("column vector is not a permutation of 0.." +
                                  std::to_string(n - 1));
        }
        seen[static_cast<std::size_t>(c)] = 1;
    }
}

PermutationPlacement PermutationPlacement::identity(int n) {
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cols[static_cast<std::size_t>(i)] = i;
    }
    return PermutationPlacement(std::move(cols));
}

Placement PermutationPlacement::to_placement() const {
    std::vector<Coord> coords;
    coords.reserve(cols_.size());
    for (int i = 0; i < size(); ++i) {
        coords.push_back({i, cols_[static_cast<std::size_t>(i)]});
    }
    return Placement(std::move(coords));
}

namespace {

void check_bounds(const Placement& placement, Dims dims) {
    for (Coord c : placement.coords()) {
        if (c.row < 0 || c.row >= dims.rows || c.col < 0 || c.col >= dims.cols) {
            throw BoundsError("coordinate " + to_string(c) + " out of bounds for " +
                              std::to_string(dims.rows) + "x" + std::to_string(dims.cols) +
                              " grid");
        }
    }
}

} // namespace

BinaryGrid occupancy(const Placement& placement, Dims dims) {
    check_bounds(placement, dims);
    BinaryGrid grid(dims);
    for (Coord c : placement.coords()) {
        grid.set(c.row, c.col, 1);
    }
    return grid;
}

Coverage adjacency_coverage(Dims dims, const Placement& placement) {
    check_bounds(placement, dims);
    Coverage cov;
    cov.mask = BinaryGrid(dims);
    for (Coord c : placement.coords()) {
        cov.mask.set(c.row, c.col, 1);
        if (c.row > 0) cov.mask.set(c.row - 1, c.col, 1);
        if (c.row + 1 < dims.rows) cov.mask.set(c.row + 1, c.col, 1);
        if (c.col > 0) cov.mask.set(c.row, c.col - 1, 1);
        if (c.col + 1 < dims.cols) cov.mask.set(c.row, c.col + 1, 1);
    }
    for (std::uint8_t v : cov.mask.cells) {
        cov.count += v;
    }
    return cov;
}

Coverage line_coverage(const Instance& instance, const Placement& placement) {
    check_bounds(placement, instance.dims());
    for (Coord c : placement.coords()) {
        if (!instance.at(c.row, c.col)) {
            throw ModelViolationError("dominator " + to_string(c) +
                                      " is not on a 1-entry (line domination)");
        }
    }
    std::vector<std::uint8_t> row_hit(static_cast<std::size_t>(instance.rows()), 0);
    std::vector<std::uint8_t> col_hit(static_cast<std::size_t>(instance.cols()), 0);
    for (Coord c : placement.coords()) {
        row_hit[static_cast<std::size_t>(c.row)] = 1;
        col_hit[static_cast<std::size_t>(c.col)] = 1;
    }
    Coverage cov;
    cov.mask = BinaryGrid(instance.dims());
    for (int r = 0; r < instance.rows(); ++r) {
        for (int c = 0; c < instance.cols(); ++c) {
            if (instance.at(r, c) &&
                (row_hit[static_cast<std::size_t>(r)] || col_hit[static_cast<std::size_t>(c)])) {
                cov.mask.set(r, c, 1);
                ++cov.count;
            }
        }
    }
    return cov;
}

int penalty(const BinaryGrid& solution) {
    const Dims dims = solution.dims;
    for (std::uint8_t v : solution.cells) {
        if (v != 0 && v != 1) {
            throw ValidationError("solution matrix entries must be 0 or 1");
        }
    }
    int violations = 0;
    for (int r = 0; r < dims.rows; ++r) {
        int sum = 0;
        for (int c = 0; c < dims.cols; ++c) {
            sum += solution.at(r, c);
        }
        if (sum != 1) {
            ++violations;
        }
    }
    for (int c = 0; c < dims.cols; ++c) {
        int sum = 0;
        for (int r = 0; r < dims.rows; ++r) {
            sum += solution.at(r, c);
        }
        if (sum != 1) {
            ++violations;
        }
    }
    return 10 * violations;
}

int influence(Dims dims, const Placement& placement, DominationModel model) {
    if (model == DominationModel::Line) {
        throw ValidationError("line-domination influence needs an instance");
    }
    return adjacency_coverage(dims, placement).count;
}

int influence(const Instance& instance, const Placement& placement, DominationModel model) {
    if (model == DominationModel::Adjacency) {
        return adjacency_coverage(instance.dims(), placement).count;
    }
    return line_coverage(instance, placement).count;
}

FitnessBreakdown fitness(Dims dims, const Placement& placement, DominationModel model) {
    FitnessBreakdown fb;
    fb.influence = influence(dims, placement, model);
    fb.penalty = penalty(occupancy(placement, dims));
    fb.fitness = fb.influence - fb.penalty;
    return fb;
}

FitnessBreakdown fitness(const Instance& instance, const Placement& placement,
                         DominationModel model) {
    FitnessBreakdown fb;
    fb.influence = influence(instance, placement, model);
    fb.penalty = penalty(occupancy(placement, instance.dims()));
    fb.fitness = fb.influence - fb.penalty;
    return fb;
}

PermutationPlacement repair(const Placement& placement, int n) {
    if (n < 1) {
        throw ValidationError("repair needs a positive grid size");
    }
    check_bounds(placement, {n, n});
    std::vector<int> assigned(static_cast<std::size_t>(n), -1);
    std::vector<std::uint8_t> col_used(static_cast<std::size_t>(n), 0);
    // Canonical coordinate order is row-major, so one pass keeps the
    // lexicographically-first usable dominator of each row.
    for (Coord c : placement.coords()) {
        if (assigned[static_cast<std::size_t>(c.row)] == -1 &&
            !col_used[static_cast<std::size_t>(c.col)]) {
            assigned[static_cast<std::size_t>(c.row)] = c.col;
            col_used[static_cast<std::size_t>(c.col)] = 1;
        }
    }
    for (int r = 0; r < n; ++r) {
        if (assigned[static_cast<std::size_t>(r)] != -1) {
            continue;
        }
        for (int c = 0; c < n; ++c) {
            if (!col_used[static_cast<std::size_t>(c)]) {
                assigned[static_cast<std::size_t>(r)] = c;
                col_used[static_cast<std::size_t>(c)] = 1;
                break;
            }
        }
    }
    return PermutationPlacement(std::move(assigned));
}

PermutationPlacement repair(const BinaryGrid& solution) {
    if (solution.dims.rows != solution.dims.cols) {
        throw ValidationError("repair needs a square solution matrix");
    }
    std::vector<Coord> coords;
    for (int r = 0; r < solution.dims.rows; ++r) {
        for (int c = 0; c < solution.dims.cols; ++c) {
            if (solution.at(r, c)) {
                coords.push_back({r, c});
            }
        }
    }
    return repair(Placement(std::move(coords)), solution.dims.rows);
}

} // namespace matdom
