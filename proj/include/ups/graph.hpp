#pragma once
// Embedded planar graphs with rotation schemes, 2-outerplanar level
// decomposition and cycle-tree sub-instances.

#include "ups/geom.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ups {

// A connected simple plane graph given by clockwise rotations. Vertex ids are
// stable throughout the pipeline; dummy vertices get ids >= n.
struct PlaneGraph {
    std::vector<std::vector<int>> rotation;  // per vertex, clockwise neighbor order
    std::vector<int> outer_face;             // clockwise boundary walk

    int vertex_count() const { return (int)rotation.size(); }
    long edge_count() const;
    bool has_edge(int u, int v) const;
    // position of v in u's rotation
    int rot_index(int u, int v) const;

    // insert v into u's rotation at index pos (0..deg)
    void insert_arc(int u, int v, int pos);
    // remove and return the position
    int erase_arc(int u, int v);

    // Faces traced from the rotation scheme. Each face is the vertex sequence
    // of its boundary walk; next dart after arriving at v from u is the
    // neighbor following u in clockwise rotation at v.
    std::vector<std::vector<int>> trace_faces() const;

    // structural validation: symmetric rotations, simple, connected, Euler
    // count, outer_face matches a traced face
    void validate() const;

    bool connected() const;
};

// Add dummy edges to connect components; returns the added edges.
std::vector<std::pair<int, int>> connect_augment(PlaneGraph& g);

struct CycleTreeInstance {
    std::vector<int> face;          // w_1..w_m, global ids, ascending global label order
    std::vector<int> inner;         // vertices of the inner component
    int face_index = -1;            // index into TwoOuterInstance::faces
    bool inner_is_tree = true;      // false: general component, handled by blocks
};

struct TwoOuterInstance {
    PlaneGraph g;
    std::vector<int> outer_vertices;        // order along the outer face (first occurrence)
    std::vector<int> level;                 // 1 or 2 per vertex
    std::vector<std::vector<int>> faces;    // faces of the outer level graph (inner faces only)
    std::vector<CycleTreeInstance> cycle_trees;

    int label_of(int v) const;              // 1-based outer order label
    std::vector<int> label_to_vertex;       // inverse, 1-based (index 0 unused)
};

struct LevelResult {
    bool ok = true;
    std::string error;
    std::vector<int> level;  // valid when ok
};

// Assign levels 1/2 from the embedding, or report a level-3 witness.
LevelResult check_two_outerplanar(const PlaneGraph& g);

// Validate and decompose; throws input_error on malformed input.
TwoOuterInstance make_instance(PlaneGraph g);

}  // namespace ups
