#pragma once

#include <string>

#include "matdom/types.hpp"

namespace matdom::render {

struct RenderSpec {
    int cell_px = 20;
    std::string dominator_color = "#1F77B4";   // blue
    std::string dominated_color = "#555555";   // shown when show_coverage
    std::string undominated_color = "#000000"; // black
    bool show_coverage = false;

    void validate() const;
};

// One rectangle per cell; document width = cols * cell_px, height =
// rows * cell_px. Dominators take the dominator color; dominated
// non-dominator cells take the dominated color when show_coverage is on;
// everything else is the undominated color. Byte-deterministic.
std::string render_svg(const Instance& board, const Placement& placement, DominationModel model,
                       const RenderSpec& spec = {});

// rows lines of cols characters: '#' dominator, '+' dominated non-dominator,
// '.' undominated; each line LF-terminated.
std::string render_ascii(const Instance& board, const Placement& placement,
                         DominationModel model);

// The plain solution-matrix dump: '1' where a dominator sits, '0' elsewhere.
std::string render_raw(const Instance& board, const Placement& placement);

} // namespace matdom::render
