#include "matdom/render.hpp"

#include <cctype>

#include "matdom/core.hpp"

namespace matdom::render {

namespace {

// Coverage mask for display. Line domination marks covered 1-entries
// without insisting that dominators sit on 1-entries; the renderer shows
// whatever placement it is handed.
BinaryGrid display_coverage(const Instance& board, const Placement& placement,
                            DominationModel model) {
    if (model == DominationModel::Adjacency) {
        return adjacency_coverage(board.dims(), placement).mask;
    }
    std::vector<std::uint8_t> row_hit(static_cast<std::size_t>(board.rows()), 0);
    std::vector<std::uint8_t> col_hit(static_cast<std::size_t>(board.cols()), 0);
    for (Coord c : placement.coords()) {
        row_hit[static_cast<std::size_t>(c.row)] = 1;
        col_hit[static_cast<std::size_t>(c.col)] = 1;
    }
    BinaryGrid mask(board.dims());
    for (int r = 0; r < board.rows(); ++r) {
        for (int c = 0; c < board.cols(); ++c) {
            if (board.at(r, c) && (row_hit[static_cast<std::size_t>(r)] ||
                                   col_hit[static_cast<std::size_t>(c)])) {
                mask.set(r, c, 1);
            }
        }
    }
    return mask;
}

bool valid_color(const std::string& color) {
    if (color.size() != 7 || color[0] != '#') {
        return false;
    }
    for (std::size_t i = 1; i < color.size(); ++i) {
        if (!std::isxdigit(static_cast<unsigned char>(color[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

void RenderSpec::validate() const {
    if (cell_px < 1) {
        throw ValidationError("cell_px must be at least 1");
    }
    for (const std::string* color :
         {&dominator_color, &dominated_color, &undominated_color}) {
        if (!valid_color(*color)) {
            throw ValidationError("color must be #RRGGBB, got \"" + *color + "\"");
        }
    }
}

std::string render_svg(const Instance& board, const Placement& placement, DominationModel model,
                       const RenderSpec& spec) {
    spec.validate();
    const BinaryGrid occ = occupancy(placement, board.dims()); // bounds-checked
    const BinaryGrid covered = display_coverage(board, placement, model);
    const int width = board.cols() * spec.cell_px;
    const int height = board.rows() * spec.cell_px;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    for (int r = 0; r < board.rows(); ++r) {
        for (int c = 0; c < board.cols(); ++c) {
            const std::string* fill = &spec.undominated_color;
            if (occ.at(r, c)) {
                fill = &spec.dominator_color;
            } else if (spec.show_coverage && covered.at(r, c)) {
                fill = &spec.dominated_color;
            }
            out += "<rect x=\"" + std::to_string(c * spec.cell_px) + "\" y=\"" +
                   std::to_string(r * spec.cell_px) + "\" width=\"" +
                   std::to_string(spec.cell_px) + "\" height=\"" + std::to_string(spec.cell_px) +
                   "\" fill=\"" + *fill + "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_ascii(const Instance& board, const Placement& placement,
                         DominationModel model) {
    const BinaryGrid occ = occupancy(placement, board.dims());
    const BinaryGrid covered = display_coverage(board, placement, model);
    std::string out;
    out.reserve(static_cast<std::size_t>(board.rows()) * (board.cols() + 1));
    for (int r = 0; r < board.rows(); ++r) {
        for (int c = 0; c < board.cols(); ++c) {
            if (occ.at(r, c)) {
                out += '#';
            } else if (covered.at(r, c)) {
                out += '+';
            } else {
                out += '.';
            }
        }
        out += '\n';
    }
    return out;
}

std::string render_raw(const Instance& board, const Placement& placement) {
    const BinaryGrid occ = occupancy(placement, board.dims());
    std::string out;
    out.reserve(static_cast<std::size_t>(board.rows()) * (board.cols() + 1));
    for (int r = 0; r < board.rows(); ++r) {
        for (int c = 0; c < board.cols(); ++c) {
            out += occ.at(r, c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

} // namespace matdom::render
