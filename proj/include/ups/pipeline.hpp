#pragma once
// End-to-end embedding pipeline: Part A surgery, labeling, Part B merging,
// placement, petal transfer and (for general instances) block handling.

#include "ups/blocks.hpp"
#include "ups/embed.hpp"

namespace ups {

struct PipelineResult {
    Drawing drawing;       // final assignment, original vertices only
    EditLog log;
    PlaneGraph final_work; // working graph at the end (dummies included)
    PlaneGraph original;   // input graph

    // trace for invariant re-checks
    std::map<int, int> label;                  // all vertices (face + inner + dummies)
    std::map<int, VertexCategory> category;
    std::vector<TreeComponent> components;
    std::map<int, int> component_target;       // component index -> face vertex
    std::vector<long> weights;                 // per label
    OuterPlacement outer;
    std::set<int> phantom;                     // b-vertices (general case)
    std::vector<BlockInfo> blocks;             // general case, empty otherwise
    std::vector<std::string> warnings;
};

PipelineResult run_pipeline(const TwoOuterInstance& inst, const UniversalPointSet& ps);

// Re-derives the key invariants from the result: restricted-subgraph
// profiles, removed-edge lemmas, edit-log round trip, weight bookkeeping,
// block convexity.
struct InvariantReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(const std::string& s) {
        ok = false;
        failures.push_back(s);
    }
};
InvariantReport verify_pipeline_invariants(const PipelineResult& res, const TwoOuterInstance& inst,
                                           const UniversalPointSet& ps);

}  // namespace ups
