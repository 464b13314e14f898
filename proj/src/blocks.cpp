#include "ups/blocks.hpp"

#include <algorithm>
#include <functional>

namespace ups {

namespace {

// biconnected components of the subgraph induced by `verts`; returns edge
// sets per component
std::vector<std::vector<std::pair<int, int>>> bicomps(const PlaneGraph& g,
                                                      const std::vector<int>& verts) {
    std::set<int> vs(verts.begin(), verts.end());
    std::map<int, int> num, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> out;
    int counter = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        num[u] = low[u] = ++counter;
        for (int v : g.rotation[u]) {
            if (!vs.count(v)) continue;
            if (!num.count(v)) {
                stack.push_back({u, v});
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    std::vector<std::pair<int, int>> comp;
                    for (;;) {
                        auto e = stack.back();
                        stack.pop_back();
                        comp.push_back(e);
                        if (e == std::make_pair(u, v)) break;
                    }
                    out.push_back(std::move(comp));
                }
            } else if (v != parent && num[v] < num[u]) {
                stack.push_back({u, v});
                low[u] = std::min(low[u], num[v]);
            }
        }
    };
    for (int s : verts)
        if (!num.count(s)) dfs(s, -1);
    return out;
}

// outer cycle of a 2-connected outerplanar block, computed from the induced
// rotations; `flip` selects the orientation
std::vector<int> block_outer_cycle(const PlaneGraph& g, const std::set<int>& bs, bool flip) {
    std::map<int, std::vector<int>> rot;
    for (int v : bs) {
        for (int u : g.rotation[v])
            if (bs.count(u)) rot[v].push_back(u);
    }
    // trace faces of the induced embedding، pick a face visiting all vertices
    std::map<std::pair<int, int>, bool> used;
    std::vector<int> best;
    for (auto& [v, r] : rot) {
        for (int u : r) {
            if (used[{v, u}]) continue;
            std::vector<int> walk;
            int a = v, b = u;
            while (!used[{a, b}]) {
                used[{a, b}] = true;
                walk.push_back(a);
                const auto& rb = rot[b];
                int i = 0;
                while (rb[i] != a) ++i;
                int c = rb[(i + 1) % rb.size()];
                a = b;
                b = c;
            }
            std::set<int> wset(walk.begin(), walk.end());
            if (walk.size() == bs.size() && wset.size() == bs.size()) {
                best = walk;
                if (!flip) return best;
            }
        }
    }
    UPS_CHECK(!best.empty(), "block without an all-vertex face");
    if (flip) std::reverse(best.begin(), best.end());
    return best;
}

bool euler_ok(const PlaneGraph& g) {
    long V = 0;
    for (const auto& r : g.rotation)
        if (!r.empty()) ++V;
    long E = g.edge_count();
    long F = (long)g.trace_faces().size();
    return F == E - V + 2;
}

}  // namespace

ContractionResult contract_blocks(PlaneGraph& work, EditLog& log, const std::vector<int>& level) {
    ContractionResult res;
    const int n0 = work.vertex_count();
    std::vector<char> seen(n0, 0);
    for (int s = 0; s < n0; ++s) {
        if (level[s] != 2 || seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> st{s};
        seen[s] = 1;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            comp.push_back(u);
            for (int v : work.rotation[u])
                if (v < n0 && level[v] == 2 && !seen[v]) {
                    seen[v] = 1;
                    st.push_back(v);
                }
        }
        auto bcs = bicomps(work, comp);
        // cut vertices: vertices in >= 2 biconnected components
        std::map<int, int> count;
        for (auto& bc : bcs) {
            std::set<int> vs;
            for (auto [u, v] : bc) {
                vs.insert(u);
                vs.insert(v);
            }
            for (int v : vs) ++count[v];
        }
        for (auto [v, c] : count)
            if (c >= 2) res.c_vertices.insert(v);

        for (auto& bc : bcs) {
            if (bc.size() <= 1) continue;  // bridge: stays a tree edge
            std::set<int> bs;
            for (auto [u, v] : bc) {
                bs.insert(u);
                bs.insert(v);
            }
            BlockInfo blk;
            blk.nb = block_outer_cycle(work, bs, false);

            // record the position of the block-edge run at every vertex
            std::map<int, int> run_start;
            for (int x : bs) {
                const auto& r = work.rotation[x];
                int deg = (int)r.size();
                std::vector<int> idx;
                for (int i = 0; i < deg; ++i)
                    if (bs.count(r[i]) &&
                        std::find(bc.begin(), bc.end(), std::make_pair(x, r[i])) != bc.end())
                        idx.push_back(i);
                // edges may be stored (u,v) or (v,u)
                idx.clear();
                for (int i = 0; i < deg; ++i) {
                    for (auto [u, v] : bc)
                        if ((u == x && v == r[i]) || (v == x && u == r[i])) idx.push_back(i);
                }
                std::sort(idx.begin(), idx.end());
                idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
                // consecutive run (cyclically)
                int k = (int)idx.size();
                int start = idx[0];
                if (k < deg) {
                    // find a rotation gap
                    for (int t = 0; t < k; ++t) {
                        int cur = idx[t], prev = idx[(t + k - 1) % k];
                        if ((prev + 1) % deg != cur) {
                            start = cur;
                        }
                    }
                    // verify contiguity from start
                    for (int t = 0; t < k; ++t)
                        UPS_CHECK(std::find(idx.begin(), idx.end(), (start + t) % deg) != idx.end(),
                                  "block edges not consecutive in a rotation");
                }
                run_start[x] = start;
            }
            for (auto [u, v] : bc) {
                log.log_remove(work, u, v, "block");
                blk.block_edges.push_back({u, v});
            }
            int b = log.log_add_vertex(work, "bvertex");
            blk.b_vertex = b;
            for (int x : blk.nb) {
                int pos_x = std::min(run_start[x], (int)work.rotation[x].size());
                log.log_add(work, x, b, pos_x, (int)work.rotation[b].size(), "star");
            }
            if (!euler_ok(work)) {
                // wrong orientation of the star rotation: rebuild flipped
                for (int x : blk.nb) log.log_remove(work, x, b, "star_undo");
                std::reverse(blk.nb.begin() + 1, blk.nb.end());
                for (int x : blk.nb) {
                    int pos_x = std::min(run_start[x], (int)work.rotation[x].size());
                    log.log_add(work, x, b, pos_x, (int)work.rotation[b].size(), "star");
                }
                UPS_CHECK(euler_ok(work), "star substitution broke planarity");
            }
            res.phantom.insert(b);
            res.blocks.push_back(std::move(blk));
        }
    }
    return res;
}

namespace {

std::map<int, int> parents_toward(const PlaneGraph& g, const CycleTreeCtx& ct, int root) {
    std::map<int, int> parent;
    if (root == -1) return parent;
    parent[root] = -1;
    std::vector<int> st{root};
    while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (int v : g.rotation[u])
            if (ct.inner_set.count(v) && !parent.count(v)) {
                parent[v] = u;
                st.push_back(v);
            }
    }
    return parent;
}

}  // namespace

void compute_openers_closers(const PlaneGraph& work, const CycleTreeCtx& ct,
                             const std::map<int, int>& label,
                             const std::map<int, VertexCategory>& category, int root,
                             std::vector<BlockInfo>& blocks) {
    auto parent = parents_toward(work, ct, root);
    int w1 = ct.face.front(), wm = ct.face.back();

    for (auto& blk : blocks) {
        int b = blk.b_vertex;
        if (!ct.inner_set.count(b)) continue;
        blk.face_index = 0;  // owned by this ct
        std::set<int> nbset(blk.nb.begin(), blk.nb.end());

        if (b == root) {
            // candidates: neighbors of b adjacent to both w_1 and w_m; take
            // the innermost at w_1 (nearest w_m in the rotation)
            std::vector<int> cand;
            for (int c : work.rotation[b]) {
                if (!nbset.count(c)) continue;
                bool a1 = work.has_edge(c, w1), am = work.has_edge(c, wm);
                if (a1 && am) cand.push_back(c);
            }
            UPS_CHECK(!cand.empty(), "root block without an opener candidate");
            const auto& r1 = work.rotation[w1];
            int deg = (int)r1.size();
            int im = work.rot_index(w1, wm);
            auto dist_before_wm = [&](int c) {
                int ic = work.rot_index(w1, c);
                return (im - ic + deg) % deg;  // smaller = nearer w_m going clockwise
            };
            int best = cand[0];
            for (int c : cand)
                if (dist_before_wm(c) < dist_before_wm(best)) best = c;
            blk.opener = best;
        } else if (work.has_edge(b, root)) {
            blk.opener = root;
        } else {
            auto it = parent.find(b);
            UPS_CHECK(it != parent.end() && it->second != -1, "b-vertex without a parent");
            blk.opener = it->second;
        }

        // closer: first N_B neighbor after (before) the opener in rotation
        const auto& rb = work.rotation[b];
        int deg = (int)rb.size();
        int ic = work.rot_index(b, blk.opener);
        bool after = label.at(blk.opener) < label.at(b);
        for (int d = 1; d < deg; ++d) {
            int v = rb[(ic + (after ? d : -d) % deg + deg) % deg];
            if (nbset.count(v) && v != blk.opener) {
                blk.closer = v;
                break;
            }
        }
        UPS_CHECK(blk.closer != -1, "block without a closer");

        // b': last counterclockwise neighbor with the same label, in N_B
        blk.bprime = -1;
        for (int d = 1; d < deg; ++d) {
            int v = rb[(ic - d % deg + deg) % deg];
            if (v != blk.opener && nbset.count(v) && label.at(v) == label.at(b)) blk.bprime = v;
        }
        (void)category;
    }
}

void reroute_root_blocks(PlaneGraph& work, EditLog& log, const CycleTreeCtx& ct,
                         const std::map<int, int>& label,
                         const std::map<int, VertexCategory>& category, int root,
                         std::vector<BlockInfo>& blocks) {
    (void)label;
    // only applies when the root itself is a b-vertex
    BlockInfo* rootblk = nullptr;
    for (auto& blk : blocks)
        if (blk.b_vertex == root && ct.inner_set.count(root)) rootblk = &blk;
    if (!rootblk) return;
    int c = rootblk->opener;
    int w1 = ct.face.front(), wm = ct.face.back();
    if (category.at(c) == VertexCategory::fork) return;

    // interior of the 3-cycle (c, w_1, w_m): vertices separated from w_2
    std::set<int> sep{c, w1, wm};
    std::set<int> outside;
    {
        int w2 = ct.face[1];
        std::vector<int> st{w2};
        outside.insert(w2);
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int v : work.rotation[u]) {
                if (sep.count(v) || outside.count(v)) continue;
                outside.insert(v);
                st.push_back(v);
            }
        }
    }
    std::set<int> interior;
    for (int v : ct.inner)
        if (!sep.count(v) && !outside.count(v)) interior.insert(v);
    for (auto& blk : blocks)
        if (interior.count(blk.b_vertex)) blk.root_block = true;
    if (interior.empty()) return;

    // remove the w_1 edges into the interior, then swap (b,c) and (w_m,b)
    std::vector<int> victims;
    for (int v : work.rotation[w1])
        if (interior.count(v)) victims.push_back(v);
    for (int v : victims) log.log_remove(work, w1, v, "reroute_w1");
    log.log_rot_swap(work, root, work.rot_index(root, c), work.rot_index(root, wm));
    UPS_CHECK(euler_ok(work), "rerouting broke planarity");
}

void relabel_c_vertices(const PlaneGraph& work, const CycleTreeCtx& ct, std::map<int, int>& label,
                        const std::map<int, VertexCategory>& category, int root,
                        const std::set<int>& c_vertices) {
    auto parent = parents_toward(work, ct, root);
    // bottom-up: deeper c-vertices first
    std::map<int, int> depth;
    std::function<int(int)> dep = [&](int v) -> int {
        if (depth.count(v)) return depth[v];
        int p = parent.at(v);
        return depth[v] = p == -1 ? 0 : dep(p) + 1;
    };
    std::vector<int> cs;
    for (int c : c_vertices)
        if (ct.inner_set.count(c) && category.at(c) == VertexCategory::branch) cs.push_back(c);
    std::sort(cs.begin(), cs.end(), [&](int a, int b) { return dep(a) > dep(b); });

    for (int c : cs) {
        // d: first fork toward the leaves, a: first fork toward the root
        std::vector<int> tn;
        for (int u : work.rotation[c])
            if (ct.inner_set.count(u)) tn.push_back(u);
        UPS_CHECK(tn.size() == 2, "branch c-vertex with tree degree != 2");
        int down = tn[0] == parent.at(c) ? tn[1] : tn[0];
        int cur = down, prev = c;
        while (category.at(cur) != VertexCategory::fork) {
            int nxt = -1;
            for (int u : work.rotation[cur])
                if (ct.inner_set.count(u) && u != prev) nxt = u;
            UPS_CHECK(nxt != -1, "branch walk stuck");
            prev = cur;
            cur = nxt;
        }
        int d = cur;
        cur = parent.at(c);
        while (cur != -1 && category.at(cur) != VertexCategory::fork) cur = parent.at(cur);
        UPS_CHECK(cur != -1, "branch c-vertex without a fork ancestor");
        int a = cur;

        auto fn = ct.face_neighbors(c);
        UPS_CHECK(fn.size() == 2, "branch c-vertex with face degree != 2");
        int v = fn[0], w = fn[1];
        int lv = label.at(v), lw = label.at(w);
        if (lw > lv) std::swap(lv, lw);  // paper naming: l(w) < l(v)
        int ld = label.at(d), la = label.at(a);
        if (lw < ld && ld < lv && lv <= la) label[c] = lv;
        else if (la <= lw && lw < ld && ld < lv) label[c] = lw;
        else
            throw check_error("branch c-vertex labels violate the two-case pattern");
    }
}

std::map<int, std::array<int, 3>> choice_of_faces(const PlaneGraph& work, const CycleTreeCtx& ct,
                                                  const std::map<int, int>& label,
                                                  std::vector<BlockInfo>& blocks,
                                                  const std::vector<TreeComponent>& comps) {
    std::map<int, std::array<int, 3>> forced;
    std::map<int, const BlockInfo*> blk_of;
    for (auto& blk : blocks)
        if (ct.inner_set.count(blk.b_vertex)) blk_of[blk.b_vertex] = &blk;

    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const TreeComponent& comp = comps[ci];
        auto it = blk_of.find(comp.cut);
        if (it == blk_of.end()) continue;  // not rooted at a b-vertex
        const BlockInfo& blk = *it->second;
        int b = blk.b_vertex;
        int b1 = comp.wedge_prev, b2 = comp.wedge_next;
        UPS_CHECK(b1 != -1 && b2 != -1, "component wedge anchors missing");

        // the face vertex between b1 and b2 in the rotation at b
        const auto& rb = work.rotation[b];
        int deg = (int)rb.size();
        int i1 = work.rot_index(b, b1);
        int wbar = -1;
        for (int d2 = 1; d2 < deg; ++d2) {
            int v = rb[(i1 + d2) % deg];
            if (v == b2) break;
            UPS_CHECK(ct.on_face(v) && wbar == -1, "unexpected vertex between wedge anchors");
            wbar = v;
        }
        UPS_CHECK(wbar != -1, "no face vertex between the wedge anchors");

        // interval (b' -> closer) counterclockwise at b
        auto in_ccw_interval = [&](int from, int to, int x) {
            int i = work.rot_index(b, from);
            for (int d2 = 1; d2 < deg; ++d2) {
                int v = rb[(i - d2 % deg + deg) % deg];
                if (v == to) return false;
                if (v == x) return true;
            }
            return false;
        };
        int bp = blk.bprime == -1 ? blk.opener : blk.bprime;
        bool both = in_ccw_interval(bp, blk.closer, b1) && in_ccw_interval(bp, blk.closer, b2);
        if (b1 == bp || b1 == blk.closer) both = in_ccw_interval(bp, blk.closer, b2);
        if (b2 == bp || b2 == blk.closer) both = both || false;
        int target = both ? b2 : b1;
        forced[(int)ci] = {b, target, wbar};
    }
    return forced;
}

void promote_blocks(const PlaneGraph& work, const CycleTreeCtx& ct,
                    const std::map<int, int>& label,
                    const std::map<int, VertexCategory>& category,
                    const std::vector<TreeComponent>& comps, const OuterPlacement& outer,
                    const UniversalPointSet& ps, std::vector<BlockInfo>& blocks, Drawing& d) {
    for (auto& blk : blocks) {
        if (!ct.inner_set.count(blk.b_vertex) || blk.root_block) continue;
        int b = blk.b_vertex;
        int c = blk.opener, cp = blk.closer;
        if (category.at(cp) == VertexCategory::fork) continue;
        bool b_fork = category.at(b) == VertexCategory::fork;
        long j = outer.point_of_label[label.at(c)];
        long k = outer.point_of_label[label.at(cp)];
        if (!b_fork && j == k) continue;  // same-segment case needs no promotion

        // center of S_k must be free
        for (auto& [v, ref] : d.assignment)
            UPS_CHECK(!(ref.j == k && ref.kind == SegKind::center),
                      "promotion target center is occupied");

        bool canonical = label.at(c) >= label.at(b);
        SegKind near_seg = SegKind::segN;
        SegKind far_seg = canonical ? SegKind::segPlus : SegKind::segMinus;

        // shift b' outward on the far segment if it sits there
        if (blk.bprime != -1 && d.assignment.count(blk.bprime)) {
            PointRef& r = d.assignment.at(blk.bprime);
            if (r.j == k && r.kind == far_seg) r.slot = ps.subsets.at(k).capacity;
        }

        d.assignment[cp] = PointRef{k, SegKind::center, 0};

        // components merged to (b, c') move to seg_N of S_k; those merged to
        // (b, c) move to the far segment
        int w_p = -1;
        {
            auto fn = ct.face_neighbors(b);
            UPS_CHECK(!fn.empty(), "b-vertex without face neighbors after triangulation");
            w_p = canonical ? fn.front() : fn.back();
        }
        long slot_near = 1, slot_far = 1;
        // reseat in merge order
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            const TreeComponent& comp = comps[ci];
            if (comp.cut != b || comp.dummies.empty()) continue;
            bool to_cp = comp.merge_a == cp || comp.merge_b == cp;
            bool to_c = comp.merge_a == c || comp.merge_b == c;
            if (!to_cp && !to_c) continue;
            for (int x : comp.dummies) {
                SegKind seg;
                if (!b_fork) seg = to_cp ? near_seg : far_seg;
                else if (to_cp) seg = work.has_edge(x, w_p) ? near_seg : far_seg;
                else
                    continue;  // b fork: only (b,c')-merged vertices move
                long& slot = seg == near_seg ? slot_near : slot_far;
                UPS_CHECK(slot <= ps.subsets.at(k).capacity, "promotion exceeds capacity");
                long use = slot++;
                if (seg == far_seg && blk.bprime != -1 && d.assignment.count(blk.bprime)) {
                    const PointRef& rb2 = d.assignment.at(blk.bprime);
                    UPS_CHECK(!(rb2.j == k && rb2.kind == seg && rb2.slot == use),
                              "promotion collides with b'");
                }
                d.assignment[x] = PointRef{k, seg, use};
            }
        }
        blk.promoted = true;
    }
}

bool block_convex_ok(const BlockInfo& blk, const Drawing& d, const UniversalPointSet& ps,
                     std::string* why) {
    std::vector<Point2> pts;
    for (int v : blk.nb) {
        auto it = d.assignment.find(v);
        if (it == d.assignment.end()) {
            if (why) *why = "block vertex " + std::to_string(v) + " unplaced";
            return false;
        }
        pts.push_back(ps.point(it->second));
    }
    if (pts.size() <= 2) return true;
    if (!is_convex_position(pts)) {
        if (why) *why = "block vertices not in convex position";
        return false;
    }
    return true;
}

}  // namespace ups
