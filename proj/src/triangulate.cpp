#include "ups/triangulate.hpp"

#include <algorithm>

namespace ups {

void EditLog::log_remove(PlaneGraph& g, int u, int v, const std::string& tag) {
    RemoveEdge op{u, v, g.rot_index(u, v), g.rot_index(v, u), tag};
    g.rotation[u].erase(g.rotation[u].begin() + op.pos_u);
    g.rotation[v].erase(g.rotation[v].begin() + op.pos_v);
    ops.push_back(op);
    if (tag == "petal") petal_edges.push_back({u, v});
    else if (tag == "bigface") bigface_edges.push_back({u, v});
    else if (tag == "reroute_w1") rerouted_w1_edges.push_back({u, v});
}

void EditLog::log_add(PlaneGraph& g, int u, int v, int pos_u, int pos_v, const std::string& tag) {
    UPS_CHECK(!g.has_edge(u, v),
              "adding a duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    g.insert_arc(u, v, pos_u);
    g.insert_arc(v, u, pos_v);
    ops.push_back(AddEdge{u, v, pos_u, pos_v, tag});
    if (tag == "triangulation" || tag == "partb") triangulation_edges.push_back({u, v});
}

int EditLog::log_add_vertex(PlaneGraph& g, const std::string& tag) {
    int id = g.vertex_count();
    g.rotation.push_back({});
    ops.push_back(AddVertex{id, tag});
    return id;
}

void EditLog::log_remove_vertex(PlaneGraph& g, int id) {
    UPS_CHECK(g.rotation[id].empty(), "removing non-isolated vertex");
    ops.push_back(RemoveVertex{id});
}

void EditLog::log_rot_swap(PlaneGraph& g, int v, int i, int k) {
    std::swap(g.rotation[v][i], g.rotation[v][k]);
    ops.push_back(RotSwap{v, i, k});
}

void replay_reverse(PlaneGraph& g, const EditLog& log) {
    for (auto it = log.ops.rbegin(); it != log.ops.rend(); ++it) {
        const auto& op = *it;
        if (std::holds_alternative<EditLog::RemoveEdge>(op)) {
            const auto& o = std::get<EditLog::RemoveEdge>(op);
            g.insert_arc(o.u, o.v, o.pos_u);
            g.insert_arc(o.v, o.u, o.pos_v);
        } else if (std::holds_alternative<EditLog::AddEdge>(op)) {
            const auto& o = std::get<EditLog::AddEdge>(op);
            g.rotation[o.u].erase(g.rotation[o.u].begin() + o.pos_u);
            g.rotation[o.v].erase(g.rotation[o.v].begin() + o.pos_v);
        } else if (std::holds_alternative<EditLog::AddVertex>(op)) {
            const auto& o = std::get<EditLog::AddVertex>(op);
            UPS_CHECK(o.id == g.vertex_count() - 1 && g.rotation[o.id].empty(),
                      "vertex add undo out of order");
            g.rotation.pop_back();
        } else if (std::holds_alternative<EditLog::RemoveVertex>(op)) {
            // vertex slot persists; nothing to undo
        } else {
            const auto& o = std::get<EditLog::RotSwap>(op);
            std::swap(g.rotation[o.v][o.i], g.rotation[o.v][o.k]);
        }
    }
}

bool editlog_roundtrip_ok(const PlaneGraph& original, PlaneGraph final_state, const EditLog& log) {
    replay_reverse(final_state, log);
    if (original.rotation.size() != final_state.rotation.size()) return false;
    for (size_t v = 0; v < original.rotation.size(); ++v)
        if (original.rotation[v] != final_state.rotation[v]) return false;
    return true;
}

const char* to_string(FaceClass c) {
    switch (c) {
        case FaceClass::triangle: return "triangle";
        case FaceClass::petal: return "petal";
        case FaceClass::small_face: return "small";
        case FaceClass::big_protected: return "big_protected";
        case FaceClass::big_unprotected: return "big";
        case FaceClass::bad: return "bad";
    }
    return "?";
}

namespace {

// Rotate the cyclic walk so that the run of face-cycle vertices starts at 0.
// For a connected inner component the face occurrences of the outer cycle are
// always contiguous.
std::vector<int> rotate_to_face_run(const CycleTreeCtx& ct, const std::vector<int>& walk) {
    const size_t k = walk.size();
    size_t start = k;
    for (size_t i = 0; i < k; ++i) {
        bool prev_f = ct.on_face(walk[(i + k - 1) % k]);
        if (ct.on_face(walk[i]) && !prev_f) {
            UPS_CHECK(start == k, "face boundary has two runs of outer-cycle vertices");
            start = i;
        }
    }
    UPS_CHECK(start < k, "face boundary without outer-cycle vertices");
    std::vector<int> out(k);
    for (size_t i = 0; i < k; ++i) out[i] = walk[(start + i) % k];
    return out;
}

int face_degree_total(const PlaneGraph& g, const CycleTreeCtx& ct, int b) {
    int d = 0;
    for (int u : g.rotation[b])
        if (ct.on_face(u)) ++d;
    return d;
}

// index of the walk position t with walk[t]==u and walk[t+1]==v
size_t dart_pos(const std::vector<int>& walk, int u, int v) {
    const size_t k = walk.size();
    for (size_t t = 0; t < k; ++t)
        if (walk[t] == u && walk[(t + 1) % k] == v) return t;
    throw check_error("dart not found on face walk");
}

}  // namespace

FaceClass classify_face(const PlaneGraph& g, const CycleTreeCtx& ct, const std::vector<int>& walk,
                        int* protector) {
    std::set<int> fs, ts;
    for (int v : walk) (ct.on_face(v) ? fs : ts).insert(v);
    UPS_CHECK(!fs.empty() && !ts.empty(), "cycle-tree face missing a level");
    if (fs.size() == 1) return FaceClass::petal;
    if (ts.size() == 1) {
        if (walk.size() == 3) return FaceClass::triangle;
        return FaceClass::small_face;
    }
    auto w = rotate_to_face_run(ct, walk);
    size_t vend = 0;
    while (vend < w.size() && ct.on_face(w[vend])) ++vend;
    int b_first = w[vend];
    int b_last = w.back();
    if (face_degree_total(g, ct, b_first) > 1) {
        if (protector) *protector = b_first;
        return FaceClass::big_protected;
    }
    if (face_degree_total(g, ct, b_last) > 1) {
        if (protector) *protector = b_last;
        return FaceClass::big_protected;
    }
    if (fs.size() == 2) return FaceClass::bad;
    return FaceClass::big_unprotected;
}

std::vector<FaceInfo> cycle_tree_faces(const PlaneGraph& g, const CycleTreeCtx& ct) {
    std::vector<FaceInfo> out;
    for (auto& walk : g.trace_faces()) {
        bool in_ct = true, has_t = false;
        for (int v : walk) {
            if ((size_t)v < ct.face_index_of.size() && ct.inner_set.count(v)) has_t = true;
            else if ((size_t)v >= ct.face_index_of.size() || !ct.on_face(v)) in_ct = false;
        }
        if (!in_ct || !has_t) continue;
        FaceInfo fi;
        fi.walk = std::move(walk);
        fi.cls = classify_face(g, ct, fi.walk, &fi.protector);
        out.push_back(std::move(fi));
    }
    return out;
}

namespace {

std::map<std::pair<int, int>, int> dart_faces(const std::vector<FaceInfo>& faces) {
    std::map<std::pair<int, int>, int> m;
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& w = faces[fi].walk;
        for (size_t i = 0; i < w.size(); ++i) m[{w[i], w[(i + 1) % w.size()]}] = (int)fi;
    }
    return m;
}

// add edge between occurrences i and j of the face walk; positions derived
// from the walk's corner neighbors
void add_diagonal(PlaneGraph& g, EditLog& log, const std::vector<int>& walk, size_t i, size_t j,
                  const std::string& tag) {
    const size_t k = walk.size();
    UPS_CHECK(i != j && walk[i] != walk[j], "degenerate diagonal");
    int u = walk[i], v = walk[j];
    int pos_u = g.rot_index(u, walk[(i + 1) % k]);
    int pos_v = g.rot_index(v, walk[(j + 1) % k]);
    log.log_add(g, u, v, pos_u, pos_v, tag);
}

}  // namespace

void remove_petal_edges(PlaneGraph& g, EditLog& log, const CycleTreeCtx& ct) {
    for (;;) {
        auto faces = cycle_tree_faces(g, ct);
        auto dmap = dart_faces(faces);
        bool removed = false;
        for (int v : ct.face) {
            for (int b : g.rotation[v]) {
                if (!ct.inner_set.count(b)) continue;
                auto it1 = dmap.find({v, b});
                auto it2 = dmap.find({b, v});
                if (it1 == dmap.end() || it2 == dmap.end()) continue;
                if (it1->second == it2->second) continue;  // bridge edge
                auto petal_at = [&](const FaceInfo& f) {
                    if (f.cls != FaceClass::petal) return false;
                    for (int x : f.walk)
                        if (ct.on_face(x) && x != v) return false;
                    return true;
                };
                if (petal_at(faces[it1->second]) && petal_at(faces[it2->second])) {
                    log.log_remove(g, v, b, "petal");
                    removed = true;
                    break;
                }
            }
            if (removed) break;
        }
        if (!removed) break;
    }
}

void remove_bad_faces(PlaneGraph& g, EditLog& log, const CycleTreeCtx& ct) {
    for (int guard = 0; guard < 100000; ++guard) {
        auto faces = cycle_tree_faces(g, ct);
        const FaceInfo* bad = nullptr;
        for (const auto& f : faces)
            if (f.cls == FaceClass::bad) {
                bad = &f;
                break;
            }
        if (!bad) return;

        auto w = rotate_to_face_run(ct, bad->walk);
        UPS_CHECK(w.size() >= 4 && ct.on_face(w[0]) && ct.on_face(w[1]) && !ct.on_face(w[2]),
                  "bad face walk has unexpected shape");
        int v1 = w[0], v2 = w[1], b1 = w[2], bl = w.back();

        auto dmap = dart_faces(faces);
        auto git = dmap.find({v1, bl});
        UPS_CHECK(git != dmap.end(), "missing neighbor face of a bad face");
        const FaceInfo& gface = faces[git->second];
        UPS_CHECK(&gface != bad, "bad face borders itself across the removed edge");
        FaceClass gcls = gface.cls;
        UPS_CHECK(gcls == FaceClass::petal || gcls == FaceClass::big_protected ||
                      gcls == FaceClass::big_unprotected || gcls == FaceClass::bad,
                  "bad face neighbor is a small face");

        int ch = -1, w1g = -1;
        if (gcls != FaceClass::petal) {
            auto gw = rotate_to_face_run(ct, gface.walk);
            size_t fe = 0;
            while (fe < gw.size() && ct.on_face(gw[fe])) ++fe;
            UPS_CHECK(gw[fe - 1] == v1 && gw[fe] == bl, "big neighbor walk has unexpected shape");
            ch = gw.back();
            w1g = gw[0];
        }

        log.log_remove(g, v1, bl, "bigface");

        auto trace = g.trace_faces();
        auto find_face_with_dart = [&](int a, int b) -> const std::vector<int>& {
            for (const auto& fw : trace)
                for (size_t t = 0; t < fw.size(); ++t)
                    if (fw[t] == a && fw[(t + 1) % fw.size()] == b) return fw;
            throw check_error("face with dart not found");
        };

        if (gcls == FaceClass::petal) {
            const auto& mw = find_face_with_dart(v2, b1);
            size_t iv = dart_pos(mw, v1, v2);
            size_t ib = (dart_pos(mw, v2, b1) + 1) % mw.size();
            add_diagonal(g, log, mw, iv, ib, "triangulation");
        } else {
            {
                const auto& mw = find_face_with_dart(v2, b1);
                size_t iv = dart_pos(mw, v1, v2);
                size_t ic = dart_pos(mw, ch, w1g);
                add_diagonal(g, log, mw, iv, ic, "triangulation");
            }
            trace = g.trace_faces();
            const auto& pw = find_face_with_dart(v2, b1);
            size_t iv = dart_pos(pw, v1, v2);
            size_t ib = (dart_pos(pw, v2, b1) + 1) % pw.size();
            add_diagonal(g, log, pw, iv, ib, "triangulation");
        }
    }
    throw check_error("bad-face elimination did not terminate");
}

PartAResult extract_tree_components(PlaneGraph& g, EditLog& log, const CycleTreeCtx& ct) {
    PartAResult res;
    // iterative degree-1 peeling of inner vertices leaves exactly the
    // biconnected block containing the outer cycle (the inner level is a
    // tree, so every cycle passes through the outer level)
    std::map<int, int> deg;
    for (int t : ct.inner) deg[t] = (int)g.rotation[t].size();
    std::set<int> peeled;
    std::vector<int> stack;
    for (int t : ct.inner)
        if (deg[t] <= 1) stack.push_back(t);
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        if (peeled.count(t) || deg[t] > 1) continue;
        peeled.insert(t);
        for (int u : g.rotation[t])
            if (ct.inner_set.count(u) && !peeled.count(u) && --deg[u] <= 1) stack.push_back(u);
    }
    if (peeled.empty()) return res;

    std::set<int> seen;
    for (int s0 : ct.inner) {
        if (!peeled.count(s0) || seen.count(s0)) continue;
        TreeComponent comp;
        std::vector<int> st{s0};
        seen.insert(s0);
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            comp.vertices.push_back(u);
            for (int v : g.rotation[u])
                if (peeled.count(v) && !seen.count(v)) {
                    seen.insert(v);
                    st.push_back(v);
                }
        }
        for (int u : comp.vertices) {
            for (int v : g.rotation[u]) {
                if (peeled.count(v)) continue;
                UPS_CHECK(comp.cut == -1 || comp.cut == v,
                          "tree component attached to two block vertices");
                comp.cut = v;
                comp.attach_root = u;
            }
        }
        UPS_CHECK(comp.cut != -1, "tree component with no attachment");
        comp.cut_on_face = ct.on_face(comp.cut);
        for (int u : comp.vertices) comp.saved_rot[u] = g.rotation[u];
        comp.cut_pos = g.rot_index(comp.cut, comp.attach_root);
        // flanking arcs at the cut that survive all extractions
        {
            const auto& r = g.rotation[comp.cut];
            int deg = (int)r.size();
            for (int d = 1; d < deg; ++d) {
                int cand = r[(comp.cut_pos - d % deg + deg) % deg];
                if (!peeled.count(cand)) {
                    comp.wedge_prev = cand;
                    break;
                }
            }
            for (int d = 1; d < deg; ++d) {
                int cand = r[(comp.cut_pos + d) % deg];
                if (!peeled.count(cand)) {
                    comp.wedge_next = cand;
                    break;
                }
            }
        }
        res.components.push_back(std::move(comp));
    }
    for (size_t ci = 0; ci < res.components.size(); ++ci) {
        auto& comp = res.components[ci];
        for (int u : comp.vertices) res.component_of[u] = (int)ci;
        for (int u : comp.vertices)
            while (!g.rotation[u].empty()) log.log_remove(g, u, g.rotation[u].front(), "cut");
        for (int u : comp.vertices) log.log_remove_vertex(g, u);
    }
    return res;
}

bool condition_degree_ok(const PlaneGraph& g, const CycleTreeCtx& ct, std::string* why) {
    for (int v : ct.face) {
        if ((int)g.rotation[v].size() > 4) {
            if (why)
                *why = "face vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.rotation[v].size());
            return false;
        }
    }
    return true;
}

bool condition_no_bad_face(const PlaneGraph& g, const CycleTreeCtx& ct, std::string* why) {
    for (const auto& f : cycle_tree_faces(g, ct)) {
        if (f.cls == FaceClass::bad) {
            if (why) *why = "bad face remains";
            return false;
        }
    }
    return true;
}

void triangulate_ct(PlaneGraph& g, EditLog& log, const CycleTreeCtx& ct) {
    std::string why;
    UPS_CHECK(condition_degree_ok(g, ct, &why), "triangulation precondition (1): " + why);
    UPS_CHECK(condition_no_bad_face(g, ct, &why), "triangulation precondition (2): " + why);

    for (int guard = 0; guard < 1000000; ++guard) {
        auto faces = cycle_tree_faces(g, ct);
        const FaceInfo* target = nullptr;
        for (const auto& f : faces)
            if (f.walk.size() > 3) {
                target = &f;
                break;
            }
        if (!target) return;

        auto w = rotate_to_face_run(ct, target->walk);
        const size_t k = w.size();
        size_t vrun = 0;
        while (vrun < k && ct.on_face(w[vrun])) ++vrun;

        switch (target->cls) {
            case FaceClass::petal: {
                // fan (v, b_i), i = 2..l-1; each new arc lands right before
                // the previous one in the rotation at v
                UPS_CHECK(vrun == 1, "petal face with more than one face vertex");
                int v = w[0];
                for (size_t i = 2; i + 1 < k; ++i) {
                    int pos_v = g.rot_index(v, w[i - 1]);
                    int pos_b = g.rot_index(w[i], w[i + 1]);
                    log.log_add(g, v, w[i], pos_v, pos_b, "triangulation");
                }
                break;
            }
            case FaceClass::small_face: {
                // fan (b, v_i), i = 2..l'-1
                UPS_CHECK(vrun == k - 1, "small face with more than one tree vertex");
                int b = w[k - 1];
                for (size_t i = 1; i + 1 < k - 1; ++i) {
                    int pos_b = g.rot_index(b, w[i - 1]);
                    int pos_v = g.rot_index(w[i], w[i + 1]);
                    log.log_add(g, b, w[i], pos_b, pos_v, "triangulation");
                }
                break;
            }
            case FaceClass::big_protected: {
                const size_t bfirst = vrun;
                int vlp = w[vrun - 1];  // v_{l'}
                int v_1 = w[0];
                if (target->protector == w[bfirst]) {
                    // (v_{l'}, b_i) for i=2..l, then (b_l, v_i) for i=2..l'-1
                    for (size_t i = bfirst + 1; i < k; ++i) {
                        int pos_v = g.rot_index(vlp, w[i - 1]);
                        int pos_b = g.rot_index(w[i], w[(i + 1) % k]);
                        log.log_add(g, vlp, w[i], pos_v, pos_b, "triangulation");
                    }
                    int bl = w[k - 1];
                    for (size_t i = 1; i + 1 < bfirst; ++i) {
                        int pos_b = g.rot_index(bl, w[i - 1]);
                        int pos_v = g.rot_index(w[i], w[i + 1]);
                        log.log_add(g, bl, w[i], pos_b, pos_v, "triangulation");
                    }
                } else {
                    // protected by b_l: (v_1, b_i) for i=l-1..1 descending,
                    // each before v_2 in the rotation at v_1
                    for (size_t i = k - 2; ; --i) {
                        int pos_v = g.rot_index(v_1, w[1]);
                        int pos_b = g.rot_index(w[i], w[i + 1]);
                        log.log_add(g, v_1, w[i], pos_v, pos_b, "triangulation");
                        if (i == bfirst) break;
                    }
                    int b_1 = w[bfirst];
                    for (size_t i = 1; i + 1 < bfirst; ++i) {
                        int pos_b = g.rot_index(b_1, i == 1 ? v_1 : w[i - 1]);
                        int pos_v = g.rot_index(w[i], w[i + 1]);
                        log.log_add(g, b_1, w[i], pos_b, pos_v, "triangulation");
                    }
                }
                break;
            }
            case FaceClass::big_unprotected: {
                // split off triangle (v_1, v_2, b_l); remainder is protected by b_l
                UPS_CHECK(vrun >= 3, "unprotected big face with fewer than three face vertices");
                add_diagonal(g, log, w, 1, k - 1, "triangulation");
                break;
            }
            case FaceClass::bad:
                throw check_error("bad face present at triangulation time");
            case FaceClass::triangle:
                break;
        }
    }
    throw check_error("triangulation did not terminate");
}

LemmaReport check_removed_edge_lemmas(const PlaneGraph& g, const EditLog& log,
                                      const CycleTreeCtx& ct, const PartAResult& parts) {
    (void)g;
    LemmaReport rep;
    std::set<std::pair<int, int>> tri;
    for (auto [u, v] : log.triangulation_edges) {
        tri.insert({u, v});
        tri.insert({v, u});
    }
    std::map<int, int> target_of_component;
    auto removed = log.petal_edges;
    removed.insert(removed.end(), log.bigface_edges.begin(), log.bigface_edges.end());
    for (auto [u, v] : removed) {
        int b = ct.inner_set.count(u) ? u : v;
        int w = b == u ? v : u;
        if (!ct.inner_set.count(b) || !ct.face_set.count(w)) continue;  // other cycle tree
        auto it = parts.component_of.find(b);
        if (it == parts.component_of.end()) {
            if (!tri.count({b, w})) {
                rep.ok = false;
                rep.error = "removed edge (" + std::to_string(b) + "," + std::to_string(w) +
                            ") with block endpoint is not a triangulation edge";
                return rep;
            }
        } else {
            int ci = it->second;
            int cut = parts.components[ci].cut;
            UPS_CHECK(ct.inner_set.count(cut),
                      "component with removed edges must hang at an inner vertex");
            if (!tri.count({w, cut})) {
                rep.ok = false;
                rep.error = "no triangulation edge from target " + std::to_string(w) +
                            " to cut vertex " + std::to_string(cut);
                return rep;
            }
            auto t = target_of_component.find(ci);
            if (t != target_of_component.end() && t->second != w) {
                rep.ok = false;
                rep.error = "tree component with two distinct removed-edge targets";
                return rep;
            }
            target_of_component[ci] = w;
        }
    }
    return rep;
}

}  // namespace ups
