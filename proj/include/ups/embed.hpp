#pragma once
// Placement of a labeled instance on the point set: outer vertices on the
// half circle by weight class, restricted subgraphs on the sub-point-sets,
// dummy-path insertion for tree components and the final petal transfer.

#include "ups/pointset.hpp"
#include "ups/triangulate.hpp"

#include <array>

namespace ups {

struct Drawing {
    std::map<int, PointRef> assignment;
    std::string points_file;  // set by IO
};

struct OuterPlacement {
    std::vector<long> point_of_label;  // label (1-based) -> outer point index j
    std::vector<long> weight;          // label (1-based) -> omega
};

// Step a/b: weights to points, dense on dense, sparse on sparse; in xi mode
// the first free point with sufficient capacity.
OuterPlacement place_outer(const std::vector<long>& weights, const UniversalPointSet& ps);

// Part B: insert a dummy path for every tree component, keeping the instance
// inner-triangulated and labeled. `target_of` maps component index to the
// face vertex its removed edges point at. `forced_face` lets the general-case
// rule pick the host triangle (a, b, wbar) for a component.
void merge_tree_components(PlaneGraph& work, EditLog& log, const CycleTreeCtx& ct,
                           std::map<int, int>& label, std::map<int, VertexCategory>& category,
                           int root, std::vector<TreeComponent>& comps,
                           const std::map<int, int>& target_of,
                           const std::map<int, std::array<int, 3>>& forced_face);

// Step c for one cycle tree: every restricted subgraph onto the sub-point-set
// of its label's point. `phantom` vertices get structure but no point.
void place_inner_forest(const PlaneGraph& work, const CycleTreeCtx& ct,
                        const std::map<int, int>& label,
                        const std::map<int, VertexCategory>& category,
                        const std::set<int>& phantom, const std::vector<int>& global_label,
                        const OuterPlacement& outer, const UniversalPointSet& ps, Drawing& d);

// Part C: move every dummy path to petal points and draw the tree components
// there; returns the assignment for the original vertices.
void revert_to_petals(Drawing& d, const std::vector<TreeComponent>& comps,
                      const std::map<int, int>& target_of, const std::map<int, int>& label,
                      const UniversalPointSet& ps);

// Petal side rule for one dummy on segment kind `s` (paper's five cases).
SegKind petal_side(int label_x, int target_v_label /*-1 if none*/, int label_c, SegKind s,
                   bool cut_on_face);

// Tree drawn on a convex point sequence: root at pts[0], subtrees on
// consecutive arcs in rotation order. Returns vertex -> point index.
std::map<int, int> draw_tree_on_convex(const std::map<int, std::vector<int>>& rot, int root,
                                       int root_edge_to, long point_count);

}  // namespace ups
