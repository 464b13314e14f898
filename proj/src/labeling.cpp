#include "ups/labeling.hpp"

#include <algorithm>
#include <functional>

namespace ups {

const char* to_string(VertexCategory c) {
    switch (c) {
        case VertexCategory::fork: return "fork";
        case VertexCategory::foliage: return "foliage";
        case VertexCategory::branch: return "branch";
        case VertexCategory::face_vertex: return "face";
        case VertexCategory::dummy: return "dummy";
    }
    return "?";
}

CycleTreeCtx::CycleTreeCtx(const PlaneGraph& graph, std::vector<int> f, std::vector<int> in)
    : g(&graph), face(std::move(f)), inner(std::move(in)) {
    face_set.insert(face.begin(), face.end());
    inner_set.insert(inner.begin(), inner.end());
    face_index_of.assign(graph.vertex_count(), 0);
    for (size_t i = 0; i < face.size(); ++i) face_index_of[face[i]] = (int)i + 1;
}

std::vector<int> CycleTreeCtx::face_neighbors(int t) const {
    std::vector<int> res;
    for (int v : g->rotation[t])
        if (on_face(v)) res.push_back(v);
    std::sort(res.begin(), res.end(), [&](int a, int b) { return windex(a) < windex(b); });
    return res;
}

Labeling build_reduced_tree(const CycleTreeCtx& ct) {
    Labeling lab;
    // T' starts as the inner tree
    std::map<int, std::set<int>> adj;
    for (int t : ct.inner) {
        adj[t];
        for (int u : ct.g->rotation[t])
            if (ct.inner_set.count(u)) adj[t].insert(u);
    }
    std::map<int, int> fdeg;
    for (int t : ct.inner) {
        int d = (int)ct.face_neighbors(t).size();
        UPS_CHECK(d >= 2, "inner vertex with fewer than two face neighbors (not inner-triangulated)");
        fdeg[t] = d;
        lab.category[t] = d > 2 ? VertexCategory::fork : VertexCategory::foliage;  // refined below
    }
    for (int t : ct.inner)
        if (fdeg[t] > 2) lab.category[t] = VertexCategory::fork;

    // phase 1: repeatedly strip non-fork vertices of T'-degree 1 (foliage)
    std::vector<int> stack;
    for (int t : ct.inner)
        if (fdeg[t] == 2 && adj[t].size() <= 1) stack.push_back(t);
    std::set<int> removed;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        if (removed.count(t) || fdeg[t] > 2 || adj[t].size() > 1) continue;
        removed.insert(t);
        lab.category[t] = VertexCategory::foliage;
        for (int u : adj[t]) {
            adj[u].erase(t);
            if (fdeg[u] == 2 && adj[u].size() <= 1 && !removed.count(u)) stack.push_back(u);
        }
        adj[t].clear();
    }
    // phase 2: remaining non-fork vertices must have T'-degree 2 (branch);
    // contract them
    for (int t : ct.inner) {
        if (removed.count(t) || fdeg[t] > 2) continue;
        UPS_CHECK(adj[t].size() == 2, "non-fork vertex of unexpected degree in reduction");
        lab.category[t] = VertexCategory::branch;
        auto it = adj[t].begin();
        int a = *it++;
        int b = *it;
        adj[a].erase(t);
        adj[b].erase(t);
        adj[a].insert(b);
        adj[b].insert(a);
        adj[t].clear();
        removed.insert(t);
    }
    for (int t : ct.inner)
        if (fdeg[t] > 2) lab.reduced[t] = std::vector<int>(adj[t].begin(), adj[t].end());

    // root: the unique fork adjacent to both w_1 and w_m
    int w1 = ct.face.front(), wm = ct.face.back();
    int root = -1;
    for (auto& [t, nb] : lab.reduced) {
        bool a1 = false, am = false;
        for (int u : ct.g->rotation[t]) {
            if (u == w1) a1 = true;
            if (u == wm) am = true;
        }
        if (a1 && am) {
            UPS_CHECK(root == -1, "root fork not unique");
            root = t;
        }
    }
    UPS_CHECK(root != -1 || lab.reduced.empty(), "no root fork adjacent to w_1 and w_m");
    lab.root = root;
    return lab;
}

namespace {

// root the inner tree at r; parent[] over inner vertices
std::map<int, int> root_tree(const CycleTreeCtx& ct, int r) {
    std::map<int, int> parent;
    parent[r] = -1;
    std::vector<int> stack{r};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : ct.g->rotation[u]) {
            if (!ct.inner_set.count(v) || parent.count(v)) continue;
            parent[v] = u;
            stack.push_back(v);
        }
    }
    UPS_CHECK(parent.size() == ct.inner.size(), "inner component not connected");
    return parent;
}

}  // namespace

Labeling label_cycle_tree(const CycleTreeCtx& ct, const std::vector<int>& global_label) {
    Labeling lab = build_reduced_tree(ct);
    if (ct.inner.empty()) return lab;
    UPS_CHECK(lab.root != -1, "cycle tree with inner vertices but no root fork");

    auto parent = root_tree(ct, lab.root);

    // children of each fork in T' (via contracted adjacency), ordered by the
    // rotation at the fork for determinism
    std::map<int, bool> used_label_vertex;  // face vertex -> already used by a fork

    // bottom-up: post-order over T'
    std::vector<int> order;
    {
        std::set<int> visited;
        std::function<void(int, int)> dfs = [&](int t, int from) {
            visited.insert(t);
            std::vector<int> kids;
            for (int u : lab.reduced.at(t))
                if (u != from && !visited.count(u)) kids.push_back(u);
            // rotation order at t: order kids by position of the first edge
            // of the T-path from t toward them; the contracted edge (t,u)
            // corresponds to a path through branch vertices
            std::sort(kids.begin(), kids.end());
            for (int u : kids) dfs(u, t);
            order.push_back(t);
        };
        dfs(lab.root, -1);
        UPS_CHECK(order.size() == lab.reduced.size(), "reduced tree not connected");
    }

    for (int a : order) {
        auto fn = ct.face_neighbors(a);  // ascending face index
        UPS_CHECK(fn.size() >= 3, "fork with fewer than three face neighbors");
        for (int w : fn)
            UPS_CHECK(!used_label_vertex.count(w) || !used_label_vertex[w],
                      "freeness invariant violated at fork processing");
        int chosen = -1;
        for (size_t i = 1; i + 1 < fn.size(); ++i) {  // interior neighbors, smallest index first
            if (!used_label_vertex[fn[i]]) {
                chosen = fn[i];
                break;
            }
        }
        UPS_CHECK(chosen != -1, "no free interior face neighbor for fork");
        lab.label[a] = global_label[chosen];
        used_label_vertex[chosen] = true;
    }
    if (lab.root != -1) {
        auto fn = ct.face_neighbors(lab.root);
        UPS_CHECK(fn.front() == ct.face.front() && fn.back() == ct.face.back(),
                  "root extremes are not w_1 and w_m");
    }

    // branch vertices: label of the first fork toward a leaf (away from root)
    for (int t : ct.inner) {
        if (lab.category.at(t) != VertexCategory::branch) continue;
        std::vector<int> tn;
        for (int u : ct.g->rotation[t])
            if (ct.inner_set.count(u)) tn.push_back(u);
        UPS_CHECK(tn.size() == 2, "branch vertex with tree degree != 2");
        int down = tn[0] == parent.at(t) ? tn[1] : tn[0];
        int cur = down, prev = t;
        while (lab.category.at(cur) != VertexCategory::fork) {
            std::vector<int> cn;
            for (int u : ct.g->rotation[cur])
                if (ct.inner_set.count(u) && u != prev) cn.push_back(u);
            UPS_CHECK(cn.size() == 1, "branch path does not lead to a fork");
            prev = cur;
            cur = cn[0];
        }
        lab.label[t] = lab.label.at(cur);
    }

    // foliage: three-way rule on the first fork toward the root
    for (int t : ct.inner) {
        if (lab.category.at(t) != VertexCategory::foliage) continue;
        int cur = parent.at(t);
        while (cur != -1 && lab.category.at(cur) != VertexCategory::fork) cur = parent.at(cur);
        UPS_CHECK(cur != -1, "foliage with no fork ancestor");
        int la = lab.label.at(cur);
        auto fn = ct.face_neighbors(t);
        UPS_CHECK(fn.size() == 2, "foliage vertex with face degree != 2");
        int v = fn[0], w = fn[1];
        int lv = global_label[v], lw = global_label[w];
        if (la <= lv) lab.label[t] = lv;
        else if (la >= lw) lab.label[t] = lw;
        else {
            // only at the root, for the path between w_1 and w_m
            UPS_CHECK(cur == lab.root, "middle foliage case away from the root");
            UPS_CHECK(v == ct.face.front() && w == ct.face.back(),
                      "middle foliage case not incident to w_1 and w_m");
            lab.label[t] = la;
        }
    }
    return lab;
}

std::vector<int> restricted_subgraph(const CycleTreeCtx& ct, const Labeling& lab, int i) {
    std::vector<int> res;
    for (int t : ct.inner) {
        auto it = lab.label.find(t);
        if (it != lab.label.end() && it->second == i) res.push_back(t);
    }
    return res;
}

ProfileReport check_restricted_profile(const CycleTreeCtx& ct, const Labeling& lab) {
    ProfileReport rep;
    std::map<int, std::vector<int>> by_label;
    for (int t : ct.inner) by_label[lab.label.at(t)].push_back(t);
    for (auto& [i, verts] : by_label) {
        std::set<int> vs(verts.begin(), verts.end());
        long edges = 0;
        int deg3 = 0;
        for (int t : verts) {
            int d = 0;
            for (int u : ct.g->rotation[t])
                if (vs.count(u)) ++d;
            edges += d;
            if (d == 3) ++deg3;
            if (d > 3) {
                rep.ok = false;
                rep.error = "H_" + std::to_string(i) + " has a vertex of degree " + std::to_string(d);
                return rep;
            }
        }
        edges /= 2;
        if (edges != (long)verts.size() - 1) {
            rep.ok = false;
            rep.error = "H_" + std::to_string(i) + " is not a tree";
            return rep;
        }
        // connectivity
        std::set<int> seen;
        std::vector<int> stack{verts[0]};
        seen.insert(verts[0]);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int x : ct.g->rotation[u])
                if (vs.count(x) && !seen.count(x)) {
                    seen.insert(x);
                    stack.push_back(x);
                }
        }
        if (seen.size() != verts.size()) {
            rep.ok = false;
            rep.error = "H_" + std::to_string(i) + " is disconnected";
            return rep;
        }
        if (deg3 > 1) {
            rep.ok = false;
            rep.error = "H_" + std::to_string(i) + " has more than one degree-3 vertex";
            return rep;
        }
    }
    return rep;
}

}  // namespace ups
