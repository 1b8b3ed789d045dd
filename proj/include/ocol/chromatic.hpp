// Exact oriented chromatic number of small graphs: least k such that the
// graph maps to some tournament on k vertices, over the isomorph-free
// tournament lists.
#pragma once

#include <optional>

#include "ocol/enumerate.hpp"
#include "ocol/hom.hpp"

namespace ocol {

struct ChiResult {
    int chi = -1;                  // -1 when the bound k_max was exceeded
    int tournament_index = -1;     // index into enumerate_tournaments(chi)
    OrientedGraph target;          // witness tournament
    std::vector<int> witness;      // homomorphism into it
    bool exceeded() const { return chi < 0; }
};

inline ChiResult oriented_chromatic_number(const OrientedGraph& g, int k_max = 7) {
    if (k_max < 1 || k_max > 7) throw std::invalid_argument("k_max must be in 1..7");
    ChiResult r;
    if (g.order() == 0) {
        r.chi = 0;
        return r;
    }
    int cap = std::min(k_max, g.order()); // chi_o never exceeds the order
    for (int k = 1; k <= cap; ++k) {
        TournamentSet ts = enumerate_tournaments(k);
        for (std::size_t i = 0; i < ts.members.size(); ++i) {
            SolverOutcome out = find_homomorphism(g, ts.members[i]);
            if (out.verdict == HomVerdict::found) {
                r.chi = k;
                r.tournament_index = static_cast<int>(i);
                r.target = ts.members[i];
                r.witness = out.witness;
                return r;
            }
        }
    }
    return r; // exceeded
}

} // namespace ocol
