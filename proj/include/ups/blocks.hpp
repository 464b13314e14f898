#pragma once
// General 2-outerplanar instances: replace every biconnected block of an
// inner component by a star around a zero-weight b-vertex, run the forest
// machinery, then re-place block vertices in convex position (with
// promotions where the closer breaks convexity) and restore block edges.

#include "ups/embed.hpp"

namespace ups {

struct BlockInfo {
    int b_vertex = -1;
    std::vector<int> nb;                          // N_B in block outer-cycle order
    std::vector<std::pair<int, int>> block_edges; // E_BL
    int face_index = -1;                          // cycle tree the block lives in
    int opener = -1, closer = -1;
    int bprime = -1;                              // rule "choice of faces" anchor
    bool root_block = false;                      // lies inside the (c, w_1, w_m) triangle
    bool promoted = false;
};

struct ContractionResult {
    std::vector<BlockInfo> blocks;
    std::set<int> phantom;     // all b-vertex ids
    std::set<int> c_vertices;  // cut vertices of the inner components
};

// Replace every non-bridge block with a star; bridges stay tree edges.
ContractionResult contract_blocks(PlaneGraph& work, EditLog& log,
                                  const std::vector<int>& level);

// Opener and closer per b-vertex (labels must be assigned).
void compute_openers_closers(const PlaneGraph& work, const CycleTreeCtx& ct,
                             const std::map<int, int>& label,
                             const std::map<int, VertexCategory>& category, int root,
                             std::vector<BlockInfo>& blocks);

// Eliminate root-blocks when the separator is a non-fork vertex by swapping
// two arcs at the root b-vertex and removing (and logging) the w_1 edges
// into the root-block region.
void reroute_root_blocks(PlaneGraph& work, EditLog& log, const CycleTreeCtx& ct,
                         const std::map<int, int>& label,
                         const std::map<int, VertexCategory>& category, int root,
                         std::vector<BlockInfo>& blocks);

// Relabel branch c-vertices per the two-case rule.
void relabel_c_vertices(const PlaneGraph& work, const CycleTreeCtx& ct,
                        std::map<int, int>& label,
                        const std::map<int, VertexCategory>& category, int root,
                        const std::set<int>& c_vertices);

// Rule "choice of Faces": host triangle (a, b, wbar) per b-rooted component.
std::map<int, std::array<int, 3>> choice_of_faces(const PlaneGraph& work, const CycleTreeCtx& ct,
                                                  const std::map<int, int>& label,
                                                  std::vector<BlockInfo>& blocks,
                                                  const std::vector<TreeComponent>& comps);

// Lemma 7 pass on the segment drawing: per block, promote the closer when it
// breaks convexity; reseats the affected dummies.
void promote_blocks(const PlaneGraph& work, const CycleTreeCtx& ct,
                    const std::map<int, int>& label,
                    const std::map<int, VertexCategory>& category,
                    const std::vector<TreeComponent>& comps, const OuterPlacement& outer,
                    const UniversalPointSet& ps, std::vector<BlockInfo>& blocks, Drawing& d);

// After Part C: N_B positions of every block must be in strictly convex
// position in block boundary order (up to rotation/reflection).
bool block_convex_ok(const BlockInfo& blk, const Drawing& d, const UniversalPointSet& ps,
                     std::string* why = nullptr);

}  // namespace ups
