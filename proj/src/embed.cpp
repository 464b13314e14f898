#include "ups/embed.hpp"

#include <algorithm>
#include <functional>

namespace ups {

OuterPlacement place_outer(const std::vector<long>& weights, const UniversalPointSet& ps) {
    OuterPlacement out;
    out.weight = weights;
    out.point_of_label.assign(weights.size(), 0);
    long s = 1;
    while (s * s < ps.n) ++s;
    long j = 0;
    for (size_t i = 1; i < weights.size(); ++i) {
        long w = weights[i];
        UPS_CHECK(w >= 1, "outer vertex with zero weight");
        bool dense_vertex = ps.mode == PointSetMode::sqrt_mode && w > s;
        ++j;
        while (j <= ps.N) {
            bool ok = ps.capacity[j] >= w;
            if (ps.mode == PointSetMode::sqrt_mode)
                ok = ok && (dense_vertex == (bool)ps.dense_point[j]);
            if (ok) break;
            ++j;
        }
        UPS_CHECK(j <= ps.N, "ran out of outer points during placement");
        out.point_of_label[i] = j;
    }
    return out;
}

std::map<int, int> draw_tree_on_convex(const std::map<int, std::vector<int>>& rot, int root,
                                       int root_edge_to, long point_count) {
    std::map<int, int> where;
    where[root] = 0;
    std::map<int, long> size;
    std::function<long(int, int)> calc = [&](int u, int parent) -> long {
        long s = 1;
        for (int v : rot.at(u))
            if (v != parent && rot.count(v) && v != root) s += calc(v, u);
        return size[u] = s;
    };
    calc(root_edge_to, root);
    UPS_CHECK(size[root_edge_to] == point_count - 1, "tree/point count mismatch");

    std::function<void(int, int, long)> place = [&](int u, int parent, long lo) {
        where[u] = (int)lo;
        long next = lo + 1;
        const auto& r = rot.at(u);
        int pi = 0;
        for (size_t t = 0; t < r.size(); ++t)
            if (r[t] == parent) pi = (int)t;
        for (size_t t = 1; t <= r.size(); ++t) {
            int v = r[(pi + t) % r.size()];
            if (v == parent || !rot.count(v) || v == root) continue;
            place(v, u, next);
            next += size[v];
        }
    };
    place(root_edge_to, root, 1);
    return where;
}

namespace {

// triangles of the current graph, rotated to start at `v`, sorted for
// determinism
std::vector<std::vector<int>> triangles_at(const PlaneGraph& g, int v) {
    std::vector<std::vector<int>> out;
    for (auto& w : g.trace_faces()) {
        if (w.size() != 3) continue;
        int s = w[0] == v ? 0 : (w[1] == v ? 1 : (w[2] == v ? 2 : -1));
        if (s < 0) continue;
        out.push_back({w[s], w[(s + 1) % 3], w[(s + 2) % 3]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Append a dummy path of k vertices at c inside the triangle walked
// (c, v, w). New rotations keep the instance inner-triangulated.
std::vector<int> append_path(PlaneGraph& g, EditLog& log, int c, int v, int w, int k) {
    std::vector<int> xs;
    int prev = c;
    for (int t = 0; t < k; ++t) {
        int x = log.log_add_vertex(g, "dummy");
        int pos_prev = prev == c ? g.rot_index(c, v) : g.rot_index(prev, v);
        log.log_add(g, prev, x, pos_prev, 0, "partb");        // x: [prev]
        log.log_add(g, x, v, 1, g.rot_index(v, w), "partb");  // x: [prev, v]
        int pos_w = t == 0 ? g.rot_index(w, c) : g.rot_index(w, xs.back());
        log.log_add(g, x, w, 1, pos_w, "partb");              // x: [prev, w, v]
        xs.push_back(x);
        prev = x;
    }
    return xs;
}

// Replace edge (a,b) by a path of k dummies joined to v and w; the face on
// the v side is walked a -> b.
std::vector<int> subdivide_edge(PlaneGraph& g, EditLog& log, int a, int b, int v, int w, int k) {
    int pos_a = g.rot_index(a, b);
    int pos_b = g.rot_index(b, a);
    log.log_remove(g, a, b, "partb_subdiv");
    std::vector<int> xs;
    int prev = a;
    for (int t = 0; t < k; ++t) {
        int x = log.log_add_vertex(g, "dummy");
        int pos_prev = prev == a ? pos_a : g.rot_index(prev, w);
        log.log_add(g, prev, x, pos_prev, 0, "partb");  // x: [prev]
        int pos_v = t == 0 ? g.rot_index(v, a) : g.rot_index(v, xs.back());
        log.log_add(g, x, v, 1, pos_v, "partb");        // x: [prev, v]
        log.log_add(g, x, w, 2, g.rot_index(w, b), "partb");  // x: [prev, v, w]
        xs.push_back(x);
        prev = x;
    }
    log.log_add(g, xs.back(), b, g.rot_index(xs.back(), w), pos_b, "partb");
    return xs;
}

}  // namespace

void merge_tree_components(PlaneGraph& work, EditLog& log, const CycleTreeCtx& ct,
                           std::map<int, int>& label, std::map<int, VertexCategory>& category,
                           int root, std::vector<TreeComponent>& comps,
                           const std::map<int, int>& target_of,
                           const std::map<int, std::array<int, 3>>& forced_face) {
    // parents toward the labeling root (tree components are not in the graph
    // at this point, so this is the reduced inner tree)
    std::map<int, int> parent;
    if (root != -1) {
        parent[root] = -1;
        std::vector<int> st{root};
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int x : work.rotation[u])
                if (ct.inner_set.count(x) && !parent.count(x)) {
                    parent[x] = u;
                    st.push_back(x);
                }
        }
    }
    auto first_fork_toward_root = [&](int from) {
        int cur = from;
        while (category.at(cur) != VertexCategory::fork) {
            auto it = parent.find(cur);
            UPS_CHECK(it != parent.end() && it->second != -1, "no fork on the path to the root");
            cur = it->second;
        }
        return cur;
    };

    for (size_t ci = 0; ci < comps.size(); ++ci) {
        TreeComponent& comp = comps[ci];
        bool mine = ct.on_face(comp.cut) || ct.inner_set.count(comp.cut);
        if (!mine || !comp.dummies.empty()) continue;
        const int k = (int)comp.vertices.size();
        int target = -1;
        if (auto it = target_of.find((int)ci); it != target_of.end()) target = it->second;

        if (comp.cut_on_face) {
            // component hanging off a face vertex; host its dummies as a
            // foliage path in the triangle on a face edge at the cut
            UPS_CHECK(target == -1, "face-rooted component with removed edges");
            int x = ct.windex(comp.cut);
            int other = x < (int)ct.face.size() ? ct.face[x] : ct.face[x - 2];
            int tvert = -1;
            std::vector<int> tw;
            for (auto& tri : triangles_at(work, comp.cut)) {
                if (std::find(tri.begin(), tri.end(), other) == tri.end()) continue;
                int third = -1;
                for (int y : tri)
                    if (y != comp.cut && y != other) third = y;
                if (third != -1 && ct.inner_set.count(third)) {
                    tvert = third;
                    tw = tri;
                    break;
                }
            }
            UPS_CHECK(tvert != -1, "no host triangle on the face edge");
            // rotate walk to start at tvert
            std::vector<int> r(3);
            int s = 0;
            while (tw[s] != tvert) ++s;
            for (int i = 0; i < 3; ++i) r[i] = tw[(s + i) % 3];
            comp.dummies = append_path(work, log, tvert, r[1], r[2], k);
            comp.face_v = r[1];
            comp.face_w = r[2];
            int la = label.at(first_fork_toward_root(tvert));
            int lv = label.at(comp.cut), lw = label.at(other);
            if (lv > lw) std::swap(lv, lw);
            int lx = la <= lv ? lv : (la >= lw ? lw : la);
            UPS_CHECK(lx == lv || lx == lw, "face-rooted dummies must take a neighbor label");
            for (int d : comp.dummies) {
                label[d] = lx;
                category[d] = VertexCategory::dummy;
            }
            continue;
        }

        // choose the host triangle
        std::vector<int> tw;
        if (auto it = forced_face.find((int)ci); it != forced_face.end()) {
            auto [fa, fb, fw] = it->second;
            for (auto& tri : triangles_at(work, fa)) {
                std::set<int> st(tri.begin(), tri.end());
                if (st.count(fb) && st.count(fw)) {
                    tw = tri;
                    break;
                }
            }
            UPS_CHECK(!tw.empty(), "forced host triangle not found");
        } else {
            auto tris = triangles_at(work, comp.cut);
            UPS_CHECK(!tris.empty(), "cut vertex with no incident triangle");
            if (target != -1) {
                for (auto& tri : tris)
                    if (std::find(tri.begin(), tri.end(), target) != tri.end()) {
                        tw = tri;
                        break;
                    }
                UPS_CHECK(!tw.empty(), "no host triangle contains the removed-edge target");
            } else {
                tw = tris.front();
            }
        }

        int fcount = 0;
        for (int y : tw)
            if (ct.on_face(y)) ++fcount;
        UPS_CHECK(fcount == 1 || fcount == 2, "host triangle with unexpected shape");

        if (fcount == 2) {
            // triangle (c, v, w) with v,w on the face; append the path at c
            std::vector<int> r(3);
            int s = 0;
            while (tw[s] != comp.cut) {
                ++s;
                UPS_CHECK(s < 3, "host triangle misses the cut");
            }
            for (int i = 0; i < 3; ++i) r[i] = tw[(s + i) % 3];
            comp.dummies = append_path(work, log, comp.cut, r[1], r[2], k);
            comp.face_v = r[1];
            comp.face_w = r[2];
            int lv = label.at(r[1]), lw = label.at(r[2]);
            int lc = label.at(comp.cut);
            if (lv > lw) std::swap(lv, lw);
            int lx;
            if (lc <= lv) lx = lv;
            else if (lc >= lw) lx = lw;
            else throw check_error("cut label strictly between its face neighbors");
            for (int d : comp.dummies) {
                label[d] = lx;
                category[d] = VertexCategory::dummy;
            }
        } else {
            // triangle (a, b, v) with one face vertex; subdivide (a,b)
            std::vector<int> r(3);
            int s = 0;
            while (ct.on_face(tw[s]) || !ct.on_face(tw[(s + 2) % 3])) {
                ++s;
                UPS_CHECK(s < 3, "cannot orient the subdivision triangle");
            }
            for (int i = 0; i < 3; ++i) r[i] = tw[(s + i) % 3];
            int a = r[0], b = r[1], vv = r[2];
            UPS_CHECK(a == comp.cut || b == comp.cut, "subdivision face not incident to the cut");
            int w_other = -1;
            for (auto& tri : triangles_at(work, b)) {
                std::set<int> st(tri.begin(), tri.end());
                if (st.count(a) && !st.count(vv))
                    for (int y : tri)
                        if (y != a && y != b) w_other = y;
            }
            UPS_CHECK(w_other != -1 && ct.on_face(w_other),
                      "subdivided edge without a second face-vertex neighbor");
            comp.dummies = subdivide_edge(work, log, a, b, vv, w_other, k);
            comp.face_v = vv;
            comp.face_w = w_other;
            comp.merge_a = a;
            comp.merge_b = b;
            int la = label.at(a), lb = label.at(b);
            if (la > lb) std::swap(la, lb);
            int lv = label.at(vv);
            int lx = lv <= la ? la : (lv >= lb ? lb : lv);
            for (int d : comp.dummies) {
                label[d] = lx;
                category[d] = VertexCategory::dummy;
            }
        }
    }
}

namespace {

struct HPath {
    std::vector<int> verts;
    SegKind seg = SegKind::segN;
};

}  // namespace

void place_inner_forest(const PlaneGraph& work, const CycleTreeCtx& ct,
                        const std::map<int, int>& label,
                        const std::map<int, VertexCategory>& category,
                        const std::set<int>& phantom, const std::vector<int>& global_label,
                        const OuterPlacement& outer, const UniversalPointSet& ps, Drawing& d) {
    std::map<int, std::vector<int>> by_label;
    for (int t : ct.inner) by_label[label.at(t)].push_back(t);

    for (auto& [i, verts] : by_label) {
        long j = outer.point_of_label[i];
        UPS_CHECK(j >= 2 && j <= ps.N - 1, "label with inner vertices on an extreme point");
        const SubPointSet& sub = ps.subsets.at(j);
        int w_x = -1;
        for (int v : ct.face)
            if (global_label[v] == i) w_x = v;
        UPS_CHECK(w_x != -1, "label not on this face");

        std::set<int> vs(verts.begin(), verts.end());
        int fork = -1;
        for (int t : verts)
            if (category.at(t) == VertexCategory::fork) {
                UPS_CHECK(fork == -1, "two fork vertices share a label");
                fork = t;
            }
        if (fork != -1 && !phantom.count(fork))
            d.assignment[fork] = PointRef{j, SegKind::center, 0};

        std::set<int> seen;
        std::vector<HPath> paths;
        for (int s0 : verts) {
            if (s0 == fork || seen.count(s0)) continue;
            std::vector<int> compv, stack{s0};
            seen.insert(s0);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                compv.push_back(u);
                for (int v : work.rotation[u])
                    if (vs.count(v) && v != fork && !seen.count(v)) {
                        seen.insert(v);
                        stack.push_back(v);
                    }
            }
            HPath hp;
            if (compv.size() == 1) {
                hp.verts = compv;
            } else {
                std::set<int> cset(compv.begin(), compv.end());
                std::vector<int> ends;
                for (int u : compv) {
                    int deg = 0;
                    for (int v : work.rotation[u])
                        if (cset.count(v)) ++deg;
                    UPS_CHECK(deg <= 2, "restricted subgraph path has a branch vertex");
                    if (deg <= 1) ends.push_back(u);
                }
                UPS_CHECK(ends.size() == 2, "restricted subgraph component is not a path");
                auto attach_rank = [&](int u) {
                    int rank = 0, id = work.vertex_count();
                    for (int v : work.rotation[u]) {
                        if (v == fork) return std::pair<int, int>{2, -v};
                        if (ct.inner_set.count(v) && !cset.count(v)) {
                            rank = 1;
                            id = std::min(id, v);
                        }
                    }
                    return std::pair<int, int>{rank, -id};
                };
                int first = attach_rank(ends[0]) >= attach_rank(ends[1]) ? ends[0] : ends[1];
                int cur = first, prev = -1;
                for (;;) {
                    hp.verts.push_back(cur);
                    int nxt = -1;
                    for (int v : work.rotation[cur])
                        if (cset.count(v) && v != prev) nxt = v;
                    if (nxt == -1) break;
                    prev = cur;
                    cur = nxt;
                }
                UPS_CHECK(hp.verts.size() == compv.size(), "path walk incomplete");
            }
            int other_label = 0;
            for (int u : hp.verts) {
                bool touches = false;
                int other = -1;
                for (int v : work.rotation[u]) {
                    if (v == w_x) touches = true;
                    else if (ct.on_face(v)) other = v;
                }
                if (touches && other != -1) {
                    int ol = global_label[other];
                    UPS_CHECK(other_label == 0 || other_label == ol,
                              "path touches the label vertex from both sides");
                    other_label = ol;
                }
            }
            hp.seg = other_label == 0  ? SegKind::segN
                     : other_label > i ? SegKind::segPlus
                                       : SegKind::segMinus;
            paths.push_back(std::move(hp));
        }
        std::set<SegKind> used;
        for (auto& hp : paths) {
            UPS_CHECK(!used.count(hp.seg), "two restricted paths on one segment");
            used.insert(hp.seg);
            long slot = 1;
            for (int u : hp.verts) {
                if (phantom.count(u)) continue;
                UPS_CHECK(slot <= sub.capacity, "segment capacity exceeded");
                d.assignment[u] = PointRef{j, hp.seg, slot};
                ++slot;
            }
        }
    }
}

SegKind petal_side(int label_x, int target_v_label, int label_c, SegKind s, bool cut_on_face) {
    if (cut_on_face) {
        // generalized face-rooted component: the side facing away from p_j
        UPS_CHECK(s != SegKind::segN, "face-rooted dummies on the N segment");
        return s == SegKind::segPlus ? SegKind::petalR : SegKind::petalL;
    }
    if (target_v_label > 0) {
        if (label_x < target_v_label) return SegKind::petalR;
        if (label_x > target_v_label) return SegKind::petalL;
        UPS_CHECK(s != SegKind::segN, "equal-label petal move from the N segment");
        return s == SegKind::segPlus ? SegKind::petalL : SegKind::petalR;
    }
    return label_c < label_x ? SegKind::petalR : SegKind::petalL;
}

void revert_to_petals(Drawing& d, const std::vector<TreeComponent>& comps,
                      const std::map<int, int>& target_of, const std::map<int, int>& label,
                      const UniversalPointSet& ps) {
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const TreeComponent& comp = comps[ci];
        if (comp.dummies.empty()) continue;
        int target = -1;
        if (auto it = target_of.find((int)ci); it != target_of.end()) target = it->second;
        int target_label = target == -1 ? -1 : label.at(target);
        int label_c = label.at(comp.cut);

        std::vector<PointRef> petal_refs;
        for (int x : comp.dummies) {
            PointRef ref = d.assignment.at(x);
            UPS_CHECK(ref.kind == SegKind::segN || ref.kind == SegKind::segPlus ||
                          ref.kind == SegKind::segMinus,
                      "dummy vertex not on a segment");
            SegKind side =
                petal_side(label.at(x), target_label, label_c, ref.kind, comp.cut_on_face);
            long sigma = ref.kind == SegKind::segN ? 0 : (ref.kind == SegKind::segPlus ? 1 : 2);
            long cap = ps.subsets.at(ref.j).capacity;
            petal_refs.push_back(PointRef{ref.j, side, sigma * cap + (ref.slot - 1)});
            d.assignment.erase(x);
        }
        std::vector<Point2> pts;
        pts.push_back(ps.point(d.assignment.at(comp.cut)));
        for (auto& r : petal_refs) pts.push_back(ps.point(r));
        UPS_CHECK(is_convex_position(pts), "component petal family is not in convex position");

        std::map<int, std::vector<int>> rot = comp.saved_rot;
        rot[comp.cut] = {comp.attach_root};
        auto where =
            draw_tree_on_convex(rot, comp.cut, comp.attach_root, (long)petal_refs.size() + 1);
        for (auto [v, idx] : where) {
            if (v == comp.cut) continue;
            d.assignment[v] = petal_refs[idx - 1];
        }
    }
}

}  // namespace ups
