#pragma once
// Labeling of cycle-tree instances: fork/branch/foliage classification via
// the reduced tree, bottom-up fork labeling, label propagation, restricted
// subgraphs.

#include "ups/graph.hpp"

#include <map>
#include <set>
#include <vector>

namespace ups {

enum class VertexCategory { fork, foliage, branch, face_vertex, dummy };
const char* to_string(VertexCategory c);

struct Labeling {
    std::map<int, int> label;                  // inner vertex -> global label
    std::map<int, VertexCategory> category;    // inner vertices
    int root = -1;                             // root fork of the reduced tree
    std::map<int, std::vector<int>> reduced;   // T' adjacency (fork vertices)
};

// Face vertex sets and helpers for one cycle tree inside the working graph.
struct CycleTreeCtx {
    const PlaneGraph* g = nullptr;
    std::vector<int> face;   // w_1..w_m (ascending global labels)
    std::vector<int> inner;  // inner component vertices
    std::set<int> face_set, inner_set;
    std::vector<int> face_index_of;  // vertex -> 1..m (0 = not on face); sized to g

    CycleTreeCtx() = default;
    CycleTreeCtx(const PlaneGraph& graph, std::vector<int> f, std::vector<int> in);
    bool on_face(int v) const {
        return (size_t)v < face_index_of.size() && face_index_of[v] != 0;
    }
    int windex(int v) const { return face_index_of[v]; }  // 1..m
    // F-neighbors of an inner vertex, ascending face index
    std::vector<int> face_neighbors(int t) const;
};

// Categories plus the reduced tree T'. Requires the instance to be
// inner-triangulated (every inner vertex adjacent to >= 2 face vertices).
Labeling build_reduced_tree(const CycleTreeCtx& ct);

// Full labeling: fork labels bottom-up, then branch and foliage rules.
// global_label[v] must give the outer-order label for face vertices.
Labeling label_cycle_tree(const CycleTreeCtx& ct, const std::vector<int>& global_label);

// Inner subgraph induced by the vertices with label i.
std::vector<int> restricted_subgraph(const CycleTreeCtx& ct, const Labeling& lab, int i);

struct ProfileReport {
    bool ok = true;
    std::string error;
};

// Lemma check: every H_i is a connected tree with at most one vertex of
// degree 3 and all others of degree <= 2 (degrees inside H_i).
ProfileReport check_restricted_profile(const CycleTreeCtx& ct, const Labeling& lab);

}  // namespace ups
