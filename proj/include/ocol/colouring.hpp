// Oriented-colouring certificates and the validity checker for conditions
// (1) adjacent vertices differ and (2) no colour pair is realized by arcs in
// both directions.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocol/digraph.hpp"

namespace ocol {

struct Colouring {
    std::vector<int> assignment; // vertex -> colour
    int palette_size = 0;        // invariant: >= max assigned colour + 1
};

inline Colouring make_colouring(std::vector<int> assignment, int palette_size = -1) {
    int maxc = -1;
    for (int c : assignment) {
        if (c < 0) throw std::invalid_argument("negative colour in assignment");
        maxc = std::max(maxc, c);
    }
    if (palette_size < 0) palette_size = maxc + 1;
    if (palette_size < maxc + 1) throw std::invalid_argument("palette smaller than assigned colours");
    return Colouring{std::move(assignment), palette_size};
}

inline int colours_used(const Colouring& c) {
    std::vector<int> seen;
    for (int x : c.assignment) seen.push_back(x);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<int>(seen.size());
}

struct ValidityReport {
    enum class Kind { valid, adjacent_equal, opposite_pair };
    Kind kind = Kind::valid;
    Arc first{};   // offending arc (adjacent_equal) or earlier arc of the pair
    Arc second{};  // later arc of an opposite-direction colour pair
    bool valid() const { return kind == Kind::valid; }

    std::string describe() const {
        switch (kind) {
            case Kind::valid:
                return "valid";
            case Kind::adjacent_equal:
                return "condition (1) violated: arc (" + std::to_string(first.tail) + "," +
                       std::to_string(first.head) + ") joins equal colours";
            case Kind::opposite_pair:
                return "condition (2) violated: arcs (" + std::to_string(first.tail) + "," +
                       std::to_string(first.head) + ") and (" + std::to_string(second.tail) + "," +
                       std::to_string(second.head) + ") realize a colour pair in both directions";
        }
        return {};
    }
};

// Throws on a partial assignment; violations are reported, not thrown.
inline ValidityReport validate_oriented_colouring(const OrientedGraph& g, const Colouring& c) {
    if (static_cast<int>(c.assignment.size()) != g.order())
        throw std::invalid_argument("colouring does not assign every vertex");
    ValidityReport r;
    std::map<std::pair<int, int>, Arc> first_arc_of_pair;
    for (Arc a : g.arcs()) {
        int cu = c.assignment[a.tail], cv = c.assignment[a.head];
        if (cu == cv) {
            r.kind = ValidityReport::Kind::adjacent_equal;
            r.first = a;
            return r;
        }
        auto rev = first_arc_of_pair.find({cv, cu});
        if (rev != first_arc_of_pair.end()) {
            r.kind = ValidityReport::Kind::opposite_pair;
            r.first = rev->second;
            r.second = a;
            return r;
        }
        first_arc_of_pair.emplace(std::pair<int, int>{cu, cv}, a);
    }
    return r;
}

} // namespace ocol
