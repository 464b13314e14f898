#include "ups/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ups {

long PlaneGraph::edge_count() const {
    long d = 0;
    for (const auto& r : rotation) d += (long)r.size();
    return d / 2;
}

bool PlaneGraph::has_edge(int u, int v) const {
    const auto& r = rotation[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

int PlaneGraph::rot_index(int u, int v) const {
    const auto& r = rotation[u];
    auto it = std::find(r.begin(), r.end(), v);
    UPS_CHECK(it != r.end(), "rot_index of missing arc");
    return (int)(it - r.begin());
}

void PlaneGraph::insert_arc(int u, int v, int pos) {
    auto& r = rotation[u];
    UPS_CHECK(pos >= 0 && pos <= (int)r.size(), "bad insertion position");
    r.insert(r.begin() + pos, v);
}

int PlaneGraph::erase_arc(int u, int v) {
    int pos = rot_index(u, v);
    rotation[u].erase(rotation[u].begin() + pos);
    return pos;
}

std::vector<std::vector<int>> PlaneGraph::trace_faces() const {
    const int n = vertex_count();
    std::map<std::pair<int, int>, bool> used;
    std::vector<std::vector<int>> faces;
    for (int u = 0; u < n; ++u) {
        for (int v : rotation[u]) {
            if (used[{u, v}]) continue;
            std::vector<int> walk;
            int a = u, b = v;
            while (!used[{a, b}]) {
                used[{a, b}] = true;
                walk.push_back(a);
                const auto& r = rotation[b];
                int i = rot_index(b, a);
                int c = r[(i + 1) % r.size()];
                a = b;
                b = c;
            }
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

bool PlaneGraph::connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : rotation[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt == n;
}

namespace {

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    for (; it != b.end(); it = std::find(it + 1, b.end(), a[0])) {
        size_t off = it - b.begin();
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i)
            if (a[i] != b[(off + i) % b.size()]) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

void PlaneGraph::validate() const {
    const int n = vertex_count();
    if (n == 0) throw input_error("empty graph");
    for (int u = 0; u < n; ++u) {
        std::set<int> seen;
        for (int v : rotation[u]) {
            if (v < 0 || v >= n) throw input_error("neighbor id out of range");
            if (v == u) throw input_error("self loop at " + std::to_string(u));
            if (!seen.insert(v).second) throw input_error("multi-edge at " + std::to_string(u));
            if (!has_edge(v, u)) throw input_error("asymmetric rotation: " + std::to_string(u) +
                                                   "->" + std::to_string(v));
        }
    }
    if (!connected()) throw input_error("graph not connected");
    auto faces = trace_faces();
    long E = edge_count();
    if (n >= 2 && (long)faces.size() != E - n + 2)
        throw input_error("rotation scheme is not planar (Euler check failed)");
    if (outer_face.empty()) throw input_error("missing outer face");
    bool found = false;
    for (const auto& f : faces)
        if (same_cycle(outer_face, f)) found = true;
    if (!found) throw input_error("outer_face does not match any traced face");
}

std::vector<std::pair<int, int>> connect_augment(PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.rotation[u])
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    std::vector<std::pair<int, int>> added;
    if (ncomp <= 1) return added;
    // attach one representative of each later component to component 0,
    // appending the dummy arc at the end of each rotation
    std::vector<int> rep(ncomp, -1);
    for (int v = 0; v < n; ++v)
        if (rep[comp[v]] < 0) rep[comp[v]] = v;
    for (int c = 1; c < ncomp; ++c) {
        int u = rep[0], v = rep[c];
        g.rotation[u].push_back(v);
        g.rotation[v].push_back(u);
        added.push_back({u, v});
    }
    return added;
}

LevelResult check_two_outerplanar(const PlaneGraph& g) {
    LevelResult res;
    const int n = g.vertex_count();
    res.level.assign(n, 2);
    for (int v : g.outer_face) res.level[v] = 1;

    // Each inner component, with the induced rotation, must have a face
    // containing all of its vertices; otherwise some vertex is at level >= 3.
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (res.level[s] == 1 || seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.rotation[u])
                if (res.level[v] == 2 && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        // induced embedding of the component
        std::map<int, int> local;
        for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = (int)i;
        PlaneGraph sub;
        sub.rotation.resize(comp.size());
        for (size_t i = 0; i < comp.size(); ++i)
            for (int v : g.rotation[comp[i]])
                if (local.count(v)) sub.rotation[i].push_back(local[v]);
        bool ok = false;
        if (comp.size() == 1) ok = true;
        else {
            for (const auto& f : sub.trace_faces()) {
                std::set<int> fs(f.begin(), f.end());
                if (fs.size() == comp.size()) ok = true;
            }
        }
        if (!ok) {
            res.ok = false;
            res.error = "inner component at vertex " + std::to_string(s) +
                        " is not outerplanar in the induced embedding (level >= 3)";
            return res;
        }
    }
    return res;
}

int TwoOuterInstance::label_of(int v) const {
    for (size_t i = 0; i < outer_vertices.size(); ++i)
        if (outer_vertices[i] == v) return (int)i + 1;
    throw check_error("label_of on non-outer vertex");
}

TwoOuterInstance make_instance(PlaneGraph g) {
    g.validate();
    TwoOuterInstance inst;

    auto lev = check_two_outerplanar(g);
    if (!lev.ok) throw input_error(lev.error);
    inst.level = lev.level;

    // outer order: first occurrence along the outer face walk
    {
        std::set<int> seen;
        for (int v : g.outer_face)
            if (seen.insert(v).second) inst.outer_vertices.push_back(v);
    }
    inst.label_to_vertex.assign(inst.outer_vertices.size() + 1, -1);
    for (size_t i = 0; i < inst.outer_vertices.size(); ++i)
        inst.label_to_vertex[i + 1] = inst.outer_vertices[i];

    const int n = g.vertex_count();
    std::vector<int> label(n, 0);
    for (size_t i = 0; i < inst.outer_vertices.size(); ++i)
        label[inst.outer_vertices[i]] = (int)i + 1;

    // faces of the outer-level graph
    PlaneGraph outerg;
    std::vector<int> g2o(n, -1);
    {
        std::vector<int> o2g;
        for (int v = 0; v < n; ++v)
            if (inst.level[v] == 1) {
                g2o[v] = (int)o2g.size();
                o2g.push_back(v);
            }
        outerg.rotation.resize(o2g.size());
        for (size_t i = 0; i < o2g.size(); ++i)
            for (int v : g.rotation[o2g[i]])
                if (inst.level[v] == 1) outerg.rotation[i].push_back(g2o[v]);
        for (const auto& f : outerg.trace_faces()) {
            std::vector<int> gl;
            gl.reserve(f.size());
            for (int x : f) gl.push_back(o2g[x]);
            inst.faces.push_back(std::move(gl));
        }
    }
    // drop the outer face itself from the face list
    {
        std::vector<int> of;
        std::set<int> seen;
        for (int v : g.outer_face)
            if (seen.insert(v).second) of.push_back(v);
        for (size_t i = 0; i < inst.faces.size(); ++i) {
            if (same_cycle(inst.faces[i], g.outer_face)) {
                inst.faces.erase(inst.faces.begin() + i);
                break;
            }
        }
    }

    // inner components and their host faces
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (inst.level[s] == 1 || seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.rotation[u])
                if (inst.level[v] == 2 && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        // find an attachment edge (t, w) with w on the outer level
        int at_t = -1, at_w = -1;
        for (int t : comp)
            for (int w : g.rotation[t])
                if (inst.level[w] == 1 && at_t < 0) {
                    at_t = t;
                    at_w = w;
                }
        if (at_t < 0) throw input_error("inner component with no attachment to the outer level");

        // host face: the corner of the outer-level graph at at_w that contains
        // the attachment arc. prev/next outer neighbors of at_w around at_t.
        const auto& rot = g.rotation[at_w];
        int ti = 0;
        while (rot[ti] != at_t) ++ti;
        int prev = -1, next = -1;
        for (int d = 1; d <= (int)rot.size(); ++d) {
            int cand = rot[(ti - d % (int)rot.size() + (int)rot.size()) % (int)rot.size()];
            if (inst.level[cand] == 1) {
                prev = cand;
                break;
            }
        }
        for (int d = 1; d <= (int)rot.size(); ++d) {
            int cand = rot[(ti + d) % (int)rot.size()];
            if (inst.level[cand] == 1) {
                next = cand;
                break;
            }
        }
        if (prev < 0 || next < 0)
            throw input_error("attachment vertex has no outer-level neighbors");
        int host = -1;
        for (size_t fi = 0; fi < inst.faces.size(); ++fi) {
            const auto& f = inst.faces[fi];
            for (size_t i = 0; i < f.size(); ++i) {
                // corner prev -> at_w -> next in the face walk
                if (f[i] == at_w && f[(i + f.size() - 1) % f.size()] == prev &&
                    f[(i + 1) % f.size()] == next) {
                    host = (int)fi;
                    break;
                }
            }
            if (host >= 0) break;
        }
        if (host < 0) throw input_error("could not locate host face of an inner component");

        CycleTreeInstance ct;
        ct.inner = comp;
        ct.face_index = host;
        // simple chordless cycle requirement: face must have no repeats
        {
            std::set<int> fs(inst.faces[host].begin(), inst.faces[host].end());
            if (fs.size() != inst.faces[host].size())
                throw input_error("host face boundary is not a simple cycle");
        }
        // rename: rotate/orient the face so that labels ascend
        {
            std::vector<int> f = inst.faces[host];
            size_t mi = 0;
            for (size_t i = 1; i < f.size(); ++i)
                if (label[f[i]] < label[f[mi]]) mi = i;
            std::vector<int> fwd, bwd;
            for (size_t i = 0; i < f.size(); ++i) fwd.push_back(f[(mi + i) % f.size()]);
            for (size_t i = 0; i < f.size(); ++i)
                bwd.push_back(f[(mi + f.size() - i) % f.size()]);
            bool fwd_ok = true, bwd_ok = true;
            for (size_t i = 0; i + 1 < f.size(); ++i) {
                if (label[fwd[i]] >= label[fwd[i + 1]]) fwd_ok = false;
                if (label[bwd[i]] >= label[bwd[i + 1]]) bwd_ok = false;
            }
            if (!fwd_ok && !bwd_ok)
                throw input_error("host face visits outer vertices out of order");
            ct.face = fwd_ok ? fwd : bwd;
        }
        // tree or general component
        long edges = 0;
        std::set<int> cs(comp.begin(), comp.end());
        for (int u : comp)
            for (int v : g.rotation[u])
                if (cs.count(v)) ++edges;
        edges /= 2;
        ct.inner_is_tree = (edges == (long)comp.size() - 1);
        inst.cycle_trees.push_back(std::move(ct));
    }

    inst.g = std::move(g);
    return inst;
}

}  // namespace ups
