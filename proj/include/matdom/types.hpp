#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matdom {

// Error taxonomy. Everything derives from std exceptions so callers can
// catch broadly; the distinct types exist so tests can pin failure modes.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BoundsError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A dominator placed somewhere the active domination model forbids
// (line domination requires dominators on 1-entries).
struct ModelViolationError : ValidationError {
    using ValidationError::ValidationError;
};

// Exhaustive search asked to exceed its configured size cap.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : ValidationError {
    using ValidationError::ValidationError;
};

struct Dims {
    int rows = 0;
    int cols = 0;

    int cell_count() const { return rows * cols; }
    bool operator==(const Dims&) const = default;
};

struct Coord {
    int row = 0;
    int col = 0;

    auto operator<=>(const Coord&) const = default;
};

std::string to_string(Coord c);

// How a dominator exerts influence.
//   Line:      a cell is dominated when it shares a row or column with a
//              dominator; dominators must sit on 1-entries of the instance.
//   Adjacency: a cell is dominated when it holds a dominator or is an
//              orthogonal neighbour of one; diagonals never count.
enum class DominationModel { Line, Adjacency };

const char* to_string(DominationModel model);
DominationModel parse_model(std::string_view name);

// An n x m binary matrix: the grid (and 1-entry pattern) to dominate.
class Instance {
  public:
    Instance(int rows, int cols, std::vector<std::uint8_t> entries);

    static Instance zeros(int rows, int cols);
    static Instance ones(int rows, int cols);

    int rows() const { return dims_.rows; }
    int cols() const { return dims_.cols; }
    Dims dims() const { return dims_; }

    std::uint8_t at(int row, int col) const { return entries_[idx(row, col)]; }
    bool in_bounds(Coord c) const {
        return c.row >= 0 && c.row < dims_.rows && c.col >= 0 && c.col < dims_.cols;
    }

    int one_count() const;
    std::vector<Coord> one_cells() const;

    const std::vector<std::uint8_t>& entries() const { return entries_; }
    bool operator==(const Instance&) const = default;

  private:
    std::size_t idx(int row, int col) const {
        return static_cast<std::size_t>(row) * dims_.cols + col;
    }

    Dims dims_;
    std::vector<std::uint8_t> entries_;
};

// A set of dominator coordinates in canonical lexicographic order.
class Placement {
  public:
    Placement() = default;
    explicit Placement(std::vector<Coord> coords);

    const std::vector<Coord>& coords() const { return coords_; }
    int size() const { return static_cast<int>(coords_.size()); }
    bool empty() const { return coords_.empty(); }
    bool contains(Coord c) const;

    bool operator==(const Placement&) const = default;

  private:
    std::vector<Coord> coords_;
};

// One dominator per row and per column: dominator of row i sits at (i, p[i]).
class PermutationPlacement {
  public:
    PermutationPlacement() = default;
    explicit PermutationPlacement(std::vector<int> cols);

    static PermutationPlacement identity(int n);

    int size() const { return static_cast<int>(cols_.size()); }
    int col_of(int row) const { return cols_[static_cast<std::size_t>(row)]; }
    const std::vector<int>& cols() const { return cols_; }

    Placement to_placement() const;

    bool operator==(const PermutationPlacement&) const = default;

  private:
    std::vector<int> cols_;
};

// Influence I, penalty P and fitness f = I - P for one candidate.
struct FitnessBreakdown {
    int influence = 0;
    int penalty = 0;
    int fitness = 0;

    bool operator==(const FitnessBreakdown&) const = default;
};

// Row-major binary matrix, used for occupancy grids and coverage masks.
struct BinaryGrid {
    Dims dims;
    std::vector<std::uint8_t> cells;

    BinaryGrid() = default;
    explicit BinaryGrid(Dims d) : dims(d), cells(static_cast<std::size_t>(d.cell_count()), 0) {}

    std::uint8_t at(int row, int col) const {
        return cells[static_cast<std::size_t>(row) * dims.cols + col];
    }
    void set(int row, int col, std::uint8_t v) {
        cells[static_cast<std::size_t>(row) * dims.cols + col] = v;
    }

    bool operator==(const BinaryGrid&) const = default;
};

struct Coverage {
    BinaryGrid mask;
    int count = 0;
};

} // namespace matdom
