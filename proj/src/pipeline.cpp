#include "ups/pipeline.hpp"

#include <algorithm>

namespace ups {

namespace {

struct CTState {
    std::vector<int> face;
    std::vector<int> inner;  // evolves through the pipeline
    int root = -1;
};

}  // namespace

PipelineResult run_pipeline(const TwoOuterInstance& inst, const UniversalPointSet& ps) {
    PipelineResult res;
    res.original = inst.g;
    PlaneGraph work = inst.g;
    EditLog& log = res.log;
    const int n_orig = work.vertex_count();
    UPS_CHECK((long)n_orig <= ps.n, "instance larger than the point set parameter");

    std::vector<int> global_label(n_orig, 0);
    for (size_t i = 0; i < inst.outer_vertices.size(); ++i) {
        int v = inst.outer_vertices[i];
        global_label[v] = (int)i + 1;
        res.label[v] = (int)i + 1;
        res.category[v] = VertexCategory::face_vertex;
    }

    bool general = false;
    for (auto& ct : inst.cycle_trees)
        if (!ct.inner_is_tree) general = true;

    ContractionResult contr;
    if (general) {
        contr = contract_blocks(work, log, inst.level);
        res.phantom = contr.phantom;
        res.blocks = contr.blocks;
    }

    // cycle-tree states with the current (possibly star-substituted) inner sets
    std::vector<CTState> cts;
    {
        std::vector<char> seen(work.vertex_count(), 0);
        std::map<int, int> face_of_orig;  // original inner vertex -> cycle tree
        for (size_t k = 0; k < inst.cycle_trees.size(); ++k)
            for (int v : inst.cycle_trees[k].inner) face_of_orig[v] = (int)k;
        std::map<int, CTState> by_ct;
        for (int s = 0; s < work.vertex_count(); ++s) {
            if (seen[s]) continue;
            bool is_inner = (s < n_orig && inst.level[s] == 2) || res.phantom.count(s);
            if (!is_inner) continue;
            std::vector<int> comp, st{s};
            seen[s] = 1;
            while (!st.empty()) {
                int u = st.back();
                st.pop_back();
                comp.push_back(u);
                for (int v : work.rotation[u]) {
                    bool vi = (v < n_orig && inst.level[v] == 2) || res.phantom.count(v);
                    if (vi && !seen[v]) {
                        seen[v] = 1;
                        st.push_back(v);
                    }
                }
            }
            int ctidx = -1;
            for (int v : comp)
                if (face_of_orig.count(v)) ctidx = face_of_orig[v];
            UPS_CHECK(ctidx != -1, "inner component without an original vertex");
            auto& state = by_ct[ctidx];
            state.face = inst.cycle_trees[ctidx].face;
            state.inner.insert(state.inner.end(), comp.begin(), comp.end());
        }
        for (auto& [k, st] : by_ct) cts.push_back(std::move(st));
    }

    // --- Part A per cycle tree ---
    std::map<int, int> comp_of_vertex;  // removed vertex -> global component index
    for (auto& ct : cts) {
        CycleTreeCtx ctx(work, ct.face, ct.inner);
        remove_petal_edges(work, log, ctx);
        remove_bad_faces(work, log, ctx);
        auto parts = extract_tree_components(work, log, ctx);
        for (auto& comp : parts.components) {
            int gi = (int)res.components.size();
            for (int v : comp.vertices) comp_of_vertex[v] = gi;
            res.components.push_back(std::move(comp));
        }
        std::vector<int> inner2;
        for (int v : ct.inner)
            if (!comp_of_vertex.count(v)) inner2.push_back(v);
        ct.inner = std::move(inner2);
        CycleTreeCtx ctx2(work, ct.face, ct.inner);
        triangulate_ct(work, log, ctx2);
        if (!ct.inner.empty()) {
            Labeling lab = label_cycle_tree(ctx2, global_label);
            ct.root = lab.root;
            for (auto& [v, l] : lab.label) res.label[v] = l;
            for (auto& [v, c] : lab.category) res.category[v] = c;
        }
    }

    // removed-edge targets per component
    {
        auto removed = log.petal_edges;
        removed.insert(removed.end(), log.bigface_edges.begin(), log.bigface_edges.end());
        for (auto [u, v] : removed) {
            int b = comp_of_vertex.count(u) ? u : (comp_of_vertex.count(v) ? v : -1);
            if (b == -1) continue;
            int w = b == u ? v : u;
            int ci = comp_of_vertex.at(b);
            auto it = res.component_target.find(ci);
            UPS_CHECK(it == res.component_target.end() || it->second == w,
                      "tree component with two removed-edge targets");
            res.component_target[ci] = w;
        }
    }

    // --- general-case adjustments ---
    if (general) {
        for (auto& ct : cts) {
            if (ct.inner.empty()) continue;
            CycleTreeCtx ctx2(work, ct.face, ct.inner);
            compute_openers_closers(work, ctx2, res.label, res.category, ct.root, res.blocks);
            reroute_root_blocks(work, log, ctx2, res.label, res.category, ct.root, res.blocks);
            relabel_c_vertices(work, ctx2, res.label, res.category, ct.root, contr.c_vertices);
        }
    }

    // --- Part B ---
    for (auto& ct : cts) {
        if (ct.inner.empty() && res.components.empty()) continue;
        CycleTreeCtx ctx2(work, ct.face, ct.inner);
        std::map<int, std::array<int, 3>> forced;
        if (general) forced = choice_of_faces(work, ctx2, res.label, res.blocks, res.components);
        merge_tree_components(work, log, ctx2, res.label, res.category, ct.root, res.components,
                              res.component_target, forced);
        for (auto& comp : res.components) {
            bool mine = ctx2.on_face(comp.cut) || ctx2.inner_set.count(comp.cut);
            if (!mine) continue;
            for (int x : comp.dummies)
                if (std::find(ct.inner.begin(), ct.inner.end(), x) == ct.inner.end())
                    ct.inner.push_back(x);
        }
    }

    // --- Step a/b: weights and outer placement ---
    res.weights.assign(inst.outer_vertices.size() + 1, 1);
    for (auto& [v, l] : res.label) {
        if (res.category.at(v) == VertexCategory::face_vertex) continue;
        if (res.phantom.count(v)) continue;
        res.weights[l] += 1;
    }
    {
        long total = 0;
        for (size_t i = 1; i < res.weights.size(); ++i) total += res.weights[i];
        UPS_CHECK(total == n_orig, "weight bookkeeping does not sum to n");
    }
    res.outer = place_outer(res.weights, ps);

    Drawing d;
    for (size_t i = 0; i < inst.outer_vertices.size(); ++i)
        d.assignment[inst.outer_vertices[i]] =
            PointRef{res.outer.point_of_label[i + 1], SegKind::outer, 0};

    // --- Step c per cycle tree ---
    for (auto& ct : cts) {
        if (ct.inner.empty()) continue;
        CycleTreeCtx ctx3(work, ct.face, ct.inner);
        place_inner_forest(work, ctx3, res.label, res.category, res.phantom, global_label,
                           res.outer, ps, d);
    }

    // --- Lemma 7 pass (general case) ---
    if (general) {
        for (auto& ct : cts) {
            if (ct.inner.empty()) continue;
            CycleTreeCtx ctx3(work, ct.face, ct.inner);
            promote_blocks(work, ctx3, res.label, res.category, res.components, res.outer, ps,
                           res.blocks, d);
        }
    }

    // --- Part C ---
    revert_to_petals(d, res.components, res.component_target, res.label, ps);

    for (int v = 0; v < n_orig; ++v) {
        auto it = d.assignment.find(v);
        UPS_CHECK(it != d.assignment.end(), "original vertex left unplaced");
        res.drawing.assignment[v] = it->second;
    }
    res.final_work = work;
    return res;
}

InvariantReport verify_pipeline_invariants(const PipelineResult& res, const TwoOuterInstance& inst,
                                           const UniversalPointSet& ps) {
    InvariantReport rep;

    if (!editlog_roundtrip_ok(res.original, res.final_work, res.log))
        rep.fail("edit log does not replay back to the input instance");

    {
        long total = 0;
        for (size_t i = 1; i < res.weights.size(); ++i) total += res.weights[i];
        if (total != res.original.vertex_count()) rep.fail("weights do not sum to n");
    }

    // restricted-subgraph profile on the final working graph, per face
    {
        std::map<int, std::vector<int>> inner_by_face;
        std::map<int, int> face_of;
        for (size_t k = 0; k < inst.cycle_trees.size(); ++k)
            for (int v : inst.cycle_trees[k].inner) face_of[v] = (int)k;
        for (auto& [v, l] : res.label) {
            if (res.category.at(v) == VertexCategory::face_vertex) continue;
            // map dummies and b-vertices to a face via graph search later
            (void)l;
        }
        for (size_t k = 0; k < inst.cycle_trees.size(); ++k) {
            const auto& face = inst.cycle_trees[k].face;
            std::set<int> fset(face.begin(), face.end());
            // collect inner vertices of the final work connected to this face
            std::set<int> inner;
            std::vector<int> st;
            for (auto& [v, l] : res.label) {
                if (res.category.at(v) == VertexCategory::face_vertex) continue;
                if (face_of.count(v) && face_of[v] == (int)k && !res.final_work.rotation[v].empty())
                    st.push_back(v);
            }
            while (!st.empty()) {
                int u = st.back();
                st.pop_back();
                if (inner.count(u)) continue;
                inner.insert(u);
                for (int v : res.final_work.rotation[u])
                    if (!fset.count(v) && res.label.count(v) &&
                        res.category.at(v) != VertexCategory::face_vertex && !inner.count(v))
                        st.push_back(v);
            }
            if (inner.empty()) continue;
            // per label: connected, tree, degree profile
            std::map<int, std::vector<int>> by_label;
            for (int v : inner) by_label[res.label.at(v)].push_back(v);
            for (auto& [i, verts] : by_label) {
                std::set<int> vs(verts.begin(), verts.end());
                long edges = 0;
                int deg3 = 0;
                bool bad = false;
                for (int t : verts) {
                    int deg = 0;
                    for (int u : res.final_work.rotation[t])
                        if (vs.count(u)) ++deg;
                    edges += deg;
                    if (deg == 3) ++deg3;
                    if (deg > 3) bad = true;
                }
                edges /= 2;
                std::set<int> seenv;
                std::vector<int> st2{verts[0]};
                while (!st2.empty()) {
                    int u = st2.back();
                    st2.pop_back();
                    if (seenv.count(u)) continue;
                    seenv.insert(u);
                    for (int x : res.final_work.rotation[u])
                        if (vs.count(x)) st2.push_back(x);
                }
                if (bad || deg3 > 1 || edges != (long)verts.size() - 1 ||
                    seenv.size() != verts.size()) {
                    rep.fail("restricted subgraph profile violated for label " +
                             std::to_string(i));
                }
            }
        }
    }

    // removed-edge lemmas from the log
    {
        std::set<std::pair<int, int>> tri;
        for (auto [u, v] : res.log.triangulation_edges) {
            tri.insert({u, v});
            tri.insert({v, u});
        }
        std::map<int, int> comp_of;
        for (size_t ci = 0; ci < res.components.size(); ++ci)
            for (int v : res.components[ci].vertices) comp_of[v] = (int)ci;
        auto removed = res.log.petal_edges;
        removed.insert(removed.end(), res.log.bigface_edges.begin(), res.log.bigface_edges.end());
        for (auto [u, v] : removed) {
            int b = comp_of.count(u) ? u : (comp_of.count(v) ? v : -1);
            int w = b == u ? v : u;
            if (b == -1) {
                // both endpoints stayed: the removed edge must be re-added as
                // a triangulation edge
                if (!tri.count({u, v}))
                    rep.fail("removed edge not covered by a triangulation edge");
            } else {
                const TreeComponent& comp = res.components[comp_of.at(b)];
                if (comp.cut_on_face) {
                    rep.fail("face-rooted component carries removed edges");
                } else if (!tri.count({w, comp.cut})) {
                    rep.fail("no triangulation edge from a removed-edge target to the cut");
                }
            }
        }
    }

    for (auto& blk : res.blocks) {
        std::string why;
        if (!block_convex_ok(blk, res.drawing, ps, &why)) rep.fail("block convexity: " + why);
    }

    // assignment must be injective and resolvable
    {
        std::map<PointRef, int> used;
        for (auto& [v, ref] : res.drawing.assignment) {
            ps.point(ref);
            auto [it, fresh] = used.insert({ref, v});
            if (!fresh) rep.fail("two vertices on one point");
        }
    }
    return rep;
}

}  // namespace ups
