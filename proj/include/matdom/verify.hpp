#pragma once

#include "matdom/types.hpp"

namespace matdom {

// The decision-problem query: does `candidate` dominate `instance` with at
// most `bound` dominators under `model`?
struct CertificateQuery {
    Instance instance;
    Placement candidate;
    int bound = 0;
    DominationModel model = DominationModel::Line;
};

struct Verdict {
    bool accepted = false;
    std::string reason; // empty when accepted

    static Verdict accept() { return {true, {}}; }
    static Verdict reject(std::string why) { return {false, std::move(why)}; }
};

// Polynomial-time certificate check. Accepted iff |C| <= K, every dominator
// is in-bounds (and on a 1-entry under line domination), and every required
// cell (all 1-entries for line, all cells for adjacency) is covered.
// Rejections name the cardinality overflow or the first violating cell in
// lexicographic order.
Verdict verify_certificate(const CertificateQuery& query);

} // namespace matdom
