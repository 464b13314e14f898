#pragma once
// Part A surgery on a cycle-tree instance: petal-edge removal, bad-face
// removal, tree component extraction and triangulation, all recorded in a
// reversible edit log.

#include "ups/labeling.hpp"

#include <variant>

namespace ups {

// Ordered log of primitive mutations, each carrying enough to undo it.
// Replaying the log in reverse on the final working graph must reproduce the
// input instance exactly.
struct EditLog {
    struct RemoveEdge {
        int u, v, pos_u, pos_v;
        std::string tag;
    };
    struct AddEdge {
        int u, v, pos_u, pos_v;
        std::string tag;
    };
    struct AddVertex {
        int id;
        std::string tag;
    };
    struct RemoveVertex {
        int id;  // isolated at removal time
    };
    struct RotSwap {
        int v, i, k;  // swap rotation positions i and k at v
    };
    using Op = std::variant<RemoveEdge, AddEdge, AddVertex, RemoveVertex, RotSwap>;
    std::vector<Op> ops;

    // typed views (edges as recorded, original endpoints)
    std::vector<std::pair<int, int>> petal_edges;          // E_P
    std::vector<std::pair<int, int>> bigface_edges;        // E_B
    std::vector<std::pair<int, int>> triangulation_edges;  // incl. bad-face dummies, Part B edges
    std::vector<std::pair<int, int>> rerouted_w1_edges;    // removed root-block edges

    void log_remove(PlaneGraph& g, int u, int v, const std::string& tag);
    void log_add(PlaneGraph& g, int u, int v, int pos_u, int pos_v, const std::string& tag);
    int log_add_vertex(PlaneGraph& g, const std::string& tag);  // returns new id
    void log_remove_vertex(PlaneGraph& g, int id);
    void log_rot_swap(PlaneGraph& g, int v, int i, int k);
};

// Apply the inverse of every op in reverse order.
void replay_reverse(PlaneGraph& g, const EditLog& log);

// True iff reverse-replaying `log` on `final_state` reproduces `original`
// exactly (rotations compared as stored).
bool editlog_roundtrip_ok(const PlaneGraph& original, PlaneGraph final_state, const EditLog& log);

enum class FaceClass { triangle, petal, small_face, big_protected, big_unprotected, bad };
const char* to_string(FaceClass c);

struct FaceInfo {
    std::vector<int> walk;  // boundary walk (occurrences)
    FaceClass cls = FaceClass::triangle;
    int protector = -1;     // for big_protected: the protecting end occurrence
};

// Internal faces of the cycle tree: faces of `g` whose boundary lies in
// F union T and meets T.
std::vector<FaceInfo> cycle_tree_faces(const PlaneGraph& g, const CycleTreeCtx& ct);
FaceClass classify_face(const PlaneGraph& g, const CycleTreeCtx& ct, const std::vector<int>& walk,
                        int* protector = nullptr);

struct TreeComponent {
    int cut = -1;                // c, stays in the instance
    bool cut_on_face = false;    // cut is a vertex of the outer cycle
    int attach_root = -1;        // component vertex adjacent to c
    std::vector<int> vertices;   // the removed vertices
    std::map<int, std::vector<int>> saved_rot;  // rotations at extraction time
    int cut_pos = -1;            // position of the (c -> attach_root) arc at c
    int wedge_prev = -1, wedge_next = -1;  // surviving arcs flanking the cut dart
    // filled by Part B / Part C:
    std::vector<int> dummies;    // dummy path vertex ids, in path order
    int merge_a = -1, merge_b = -1;  // subdivision case: replaced edge; -1,-1 = appended at cut
    int face_v = -1, face_w = -1;    // the two face vertices every dummy joins
};

struct PartAResult {
    std::vector<TreeComponent> components;
    // map: inner vertex -> index into components (for Lemma checks / Part C)
    std::map<int, int> component_of;
};

// The four Part A steps. All mutate `g` and append to `log`.
void remove_petal_edges(PlaneGraph& g, EditLog& log, const CycleTreeCtx& ct);
void remove_bad_faces(PlaneGraph& g, EditLog& log, const CycleTreeCtx& ct);
PartAResult extract_tree_components(PlaneGraph& g, EditLog& log, const CycleTreeCtx& ct);
void triangulate_ct(PlaneGraph& g, EditLog& log, const CycleTreeCtx& ct);

// Conditions of the triangulation lemma: (1) every face vertex has degree at
// most four, (2) no bad face.
bool condition_degree_ok(const PlaneGraph& g, const CycleTreeCtx& ct, std::string* why = nullptr);
bool condition_no_bad_face(const PlaneGraph& g, const CycleTreeCtx& ct, std::string* why = nullptr);

struct LemmaReport {
    bool ok = true;
    std::string error;
};

// Every removed edge (b,v) is a triangulation edge when b stayed in the
// block component, and otherwise (v, cut(b)) is one; and all removed edges
// of one tree component share the face endpoint v.
LemmaReport check_removed_edge_lemmas(const PlaneGraph& g, const EditLog& log,
                                      const CycleTreeCtx& ct, const PartAResult& parts);

}  // namespace ups
