#pragma once
// Independent certification of a drawing: exact all-pairs segment tests
// against the geometry kernel only.

#include "ups/embed.hpp"
#include "ups/graph.hpp"

namespace ups {

struct Certificate {
    struct BadPair {
        int a1, b1, a2, b2;
        SegRel rel;
    };
    std::vector<BadPair> crossings;                  // cross / overlap / touch_interior pairs
    std::vector<std::pair<int, int>> coincidences;   // vertex pairs on the same point
    std::vector<int> off_set;                        // vertices without a resolvable point
    std::vector<int> unassigned;                     // graph vertices missing from the drawing
    bool pass() const {
        return crossings.empty() && coincidences.empty() && off_set.empty() && unassigned.empty();
    }
    std::string summary() const;
};

Certificate verify_drawing(const PlaneGraph& g, const Drawing& d, const UniversalPointSet& ps);

}  // namespace ups
