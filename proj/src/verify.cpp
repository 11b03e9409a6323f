#include "matdom/verify.hpp"

#include "matdom/core.hpp"

namespace matdom {

Verdict verify_certificate(const CertificateQuery& query) {
    if (query.bound < 0) {
        throw ValidationError("certificate bound K must be non-negative");
    }
    const Instance& inst = query.instance;
    const Placement& cand = query.candidate;

    if (cand.size() > query.bound) {
        return Verdict::reject("cardinality " + std::to_string(cand.size()) +
                               " exceeds bound " + std::to_string(query.bound));
    }
    for (Coord c : cand.coords()) {
        if (!inst.in_bounds(c)) {
            return Verdict::reject("dominator " + to_string(c) + " out of bounds");
        }
    }
    if (query.model == DominationModel::Line) {
        for (Coord c : cand.coords()) {
            if (!inst.at(c.row, c.col)) {
                return Verdict::reject("dominator " + to_string(c) + " is not on a 1-entry");
            }
        }
        std::vector<std::uint8_t> row_hit(static_cast<std::size_t>(inst.rows()), 0);
        std::vector<std::uint8_t> col_hit(static_cast<std::size_t>(inst.cols()), 0);
        for (Coord c : cand.coords()) {
            row_hit[static_cast<std::size_t>(c.row)] = 1;
            col_hit[static_cast<std::size_t>(c.col)] = 1;
        }
        for (int r = 0; r < inst.rows(); ++r) {
            for (int c = 0; c < inst.cols(); ++c) {
                if (inst.at(r, c) && !row_hit[static_cast<std::size_t>(r)] &&
                    !col_hit[static_cast<std::size_t>(c)]) {
                    return Verdict::reject("cell " + to_string({r, c}) + " undominated");
                }
            }
        }
        return Verdict::accept();
    }

    const Coverage cov = adjacency_coverage(inst.dims(), cand);
    for (int r = 0; r < inst.rows(); ++r) {
        for (int c = 0; c < inst.cols(); ++c) {
            if (!cov.mask.at(r, c)) {
                return Verdict::reject("cell " + to_string({r, c}) + " undominated");
            }
        }
    }
    return Verdict::accept();
}

} // namespace matdom
