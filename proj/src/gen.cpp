#include "ups/gen.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace ups {

const char* to_string(InstanceClass c) {
    switch (c) {
        case InstanceClass::cycle_tree_triangulated: return "cycle-tree-triangulated";
        case InstanceClass::forest_inner: return "forest-inner";
        case InstanceClass::general: return "general";
    }
    return "?";
}

InstanceClass instance_class_from_string(const std::string& s) {
    if (s == "cycle-tree-triangulated") return InstanceClass::cycle_tree_triangulated;
    if (s == "forest-inner") return InstanceClass::forest_inner;
    if (s == "general") return InstanceClass::general;
    throw input_error("unknown instance class: " + s);
}

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    long below(long hi) { return hi <= 1 ? 0 : (long)(eng() % (unsigned long long)hi); }
    long in(long lo, long hi) { return lo + below(hi - lo + 1); }
    bool coin(double p = 0.5) { return (eng() >> 11) * 0x1.0p-53 < p; }
};

// Structure of one triangulated region: a tree vertex spanning an arc with a
// set of anchored positions; every gap between consecutive anchors carries a
// child region.
struct RegionNode {
    std::vector<int> anchors;  // positions strictly inside the span
    std::vector<RegionNode> kids;  // one per gap, in order
};

// random region structure with exactly `budget` descendant vertices
RegionNode random_region(Rng& rng, int a, int b, int budget) {
    RegionNode node;
    int positions = b - a - 1;
    std::vector<int> anchored;
    if (budget == 0) {
        for (int i = a + 1; i < b; ++i) anchored.push_back(i);
    } else {
        UPS_CHECK(positions >= 1, "region cannot host a subtree");
        for (int i = a + 1; i < b; ++i)
            if (rng.coin()) anchored.push_back(i);
        // identify gaps; budget > 0 needs at least one
        auto gaps_of = [&](const std::vector<int>& anc) {
            std::vector<std::pair<int, int>> gs;
            int prev = a;
            for (int x : anc) {
                if (x - prev >= 2) gs.push_back({prev, x});
                prev = x;
            }
            if (b - prev >= 2) gs.push_back({prev, b});
            return gs;
        };
        auto gaps = gaps_of(anchored);
        if (gaps.empty()) {
            // drop one random anchored position (or use the whole span)
            if (anchored.empty()) {
                gaps = {{a, b}};
            } else {
                anchored.erase(anchored.begin() + rng.below((long)anchored.size()));
                gaps = gaps_of(anchored);
            }
        }
        UPS_CHECK(!gaps.empty(), "no gap for the subtree budget");
        // random composition of budget into gaps.size() parts, each >= 1
        int g = (int)gaps.size();
        while (g > budget) {
            // too many gaps: anchor positions inside some gap to shrink it
            // (always possible by filling a widest gap completely)
            int widest = 0;
            for (int i = 1; i < g; ++i)
                if (gaps[i].second - gaps[i].first > gaps[widest].second - gaps[widest].first)
                    widest = i;
            for (int p = gaps[widest].first + 1; p < gaps[widest].second; ++p)
                anchored.push_back(p);
            std::sort(anchored.begin(), anchored.end());
            gaps = gaps_of(anchored);
            g = (int)gaps.size();
            UPS_CHECK(g >= 1 || budget == 0, "gap balancing failed");
        }
        std::vector<int> parts(g, 1);
        for (int extra = budget - g; extra > 0; --extra) ++parts[rng.below(g)];
        node.anchors = anchored;
        for (int i = 0; i < g; ++i)
            node.kids.push_back(random_region(rng, gaps[i].first, gaps[i].second, parts[i] - 1));
        return node;
    }
    node.anchors = anchored;
    return node;
}

struct TreeShape {
    // mirrors the recursion: per region, its id and child shapes
    int id = -1;
    int a = 0, b = 0;
    std::vector<int> anchors;
    std::vector<TreeShape> kids;
};

TreeShape materialize(PlaneGraph& g, const RegionNode& node, int a, int b, int parent,
                      const std::vector<int>& face) {
    TreeShape shape;
    shape.a = a;
    shape.b = b;
    shape.anchors = node.anchors;
    int t = g.vertex_count();
    shape.id = t;
    g.rotation.push_back({});
    std::vector<int> anchors;
    anchors.push_back(a);
    anchors.insert(anchors.end(), node.anchors.begin(), node.anchors.end());
    anchors.push_back(b);
    size_t kid = 0;
    for (size_t i = 0; i < anchors.size(); ++i) {
        g.rotation[t].push_back(face[anchors[i]]);
        if (i + 1 < anchors.size() && anchors[i + 1] - anchors[i] >= 2) {
            TreeShape ks = materialize(g, node.kids[kid], anchors[i], anchors[i + 1], t, face);
            g.rotation[t].push_back(ks.id);
            shape.kids.push_back(std::move(ks));
            ++kid;
        }
    }
    UPS_CHECK(kid == node.kids.size(), "child/gap mismatch");
    if (parent != -1) g.rotation[t].push_back(parent);
    return shape;
}

// contribution at face position p of the region `shape`:
//   p == a:            [first-gap child's contrib at a ..., id]
//   p == b:            [id, last-gap child's contrib at b ...]
//   p interior anchor: [right-gap child contrib, id, left-gap child contrib]
//   p inside a gap:    child's contrib
std::vector<int> contrib_at(const TreeShape& shape, int p) {
    std::vector<int> anchors;
    anchors.push_back(shape.a);
    anchors.insert(anchors.end(), shape.anchors.begin(), shape.anchors.end());
    anchors.push_back(shape.b);
    // locate gaps
    std::vector<std::pair<std::pair<int, int>, const TreeShape*>> gaps;
    size_t kid = 0;
    for (size_t i = 0; i + 1 < anchors.size(); ++i)
        if (anchors[i + 1] - anchors[i] >= 2) gaps.push_back({{anchors[i], anchors[i + 1]}, &shape.kids[kid++]});

    auto gap_left_of = [&](int pos) -> const TreeShape* {  // gap ending at pos
        for (auto& gp : gaps)
            if (gp.first.second == pos) return gp.second;
        return nullptr;
    };
    auto gap_right_of = [&](int pos) -> const TreeShape* {  // gap starting at pos
        for (auto& gp : gaps)
            if (gp.first.first == pos) return gp.second;
        return nullptr;
    };
    std::vector<int> out;
    if (p == shape.a) {
        if (auto* c = gap_right_of(p)) out = contrib_at(*c, p);
        out.push_back(shape.id);
        return out;
    }
    if (p == shape.b) {
        out.push_back(shape.id);
        if (auto* c = gap_left_of(p)) {
            auto rest = contrib_at(*c, p);
            out.insert(out.end(), rest.begin(), rest.end());
        }
        return out;
    }
    bool anchored = std::find(shape.anchors.begin(), shape.anchors.end(), p) != shape.anchors.end();
    if (anchored) {
        if (auto* c = gap_right_of(p)) out = contrib_at(*c, p);
        out.push_back(shape.id);
        if (auto* c = gap_left_of(p)) {
            auto rest = contrib_at(*c, p);
            out.insert(out.end(), rest.begin(), rest.end());
        }
        return out;
    }
    for (auto& gp : gaps)
        if (gp.first.first < p && p < gp.first.second) return contrib_at(*gp.second, p);
    throw check_error("position outside the region");
}

// host a triangulated tree of `budget` vertices inside the face (vertex list
// in ascending-label orientation)
void host_tree(PlaneGraph& g, const std::vector<int>& face, int budget, Rng& rng) {
    if (budget <= 0) return;
    int m = (int)face.size();
    RegionNode node = random_region(rng, 0, m - 1, budget - 1);
    TreeShape shape = materialize(g, node, 0, m - 1, -1, face);
    for (int p = 0; p < m; ++p) {
        auto list = contrib_at(shape, p);
        if (p != 0 && p != m - 1) {
            bool anchored_somewhere = !list.empty();
            (void)anchored_somewhere;
        }
        if (list.empty()) continue;
        int prev = face[(p - 1 + m) % m];
        int pos = g.rot_index(face[p], prev);
        for (size_t i = 0; i < list.size(); ++i)
            g.insert_arc(face[p], list[i], pos + (int)i);
    }
}

// enumerate all region structures with the exact budget
void enum_regions(int a, int b, int budget, std::vector<RegionNode>& out) {
    int positions = b - a - 1;
    if (budget == 0) {
        RegionNode n;
        for (int i = a + 1; i < b; ++i) n.anchors.push_back(i);
        out.push_back(std::move(n));
        return;
    }
    if (positions < 1) return;
    // all anchor subsets
    for (int mask = 0; mask < (1 << positions); ++mask) {
        std::vector<int> anchors;
        for (int i = 0; i < positions; ++i)
            if (mask & (1 << i)) anchors.push_back(a + 1 + i);
        std::vector<std::pair<int, int>> gaps;
        int prev = a;
        for (int x : anchors) {
            if (x - prev >= 2) gaps.push_back({prev, x});
            prev = x;
        }
        if (b - prev >= 2) gaps.push_back({prev, b});
        int gcnt = (int)gaps.size();
        if (gcnt == 0 || gcnt > budget) continue;
        // compositions of budget into gcnt parts >= 1
        std::vector<int> parts(gcnt, 1);
        std::function<void(int, int)> comp = [&](int idx, int left) {
            if (idx == gcnt - 1) {
                parts[idx] = left;
                // expand children
                std::vector<std::vector<RegionNode>> kidsets(gcnt);
                for (int i = 0; i < gcnt; ++i)
                    enum_regions(gaps[i].first, gaps[i].second, parts[i] - 1, kidsets[i]);
                for (auto& ks : kidsets)
                    if (ks.empty()) return;
                std::vector<size_t> pick(gcnt, 0);
                for (;;) {
                    RegionNode n;
                    n.anchors = anchors;
                    for (int i = 0; i < gcnt; ++i) n.kids.push_back(kidsets[i][pick[i]]);
                    out.push_back(std::move(n));
                    int i = gcnt - 1;
                    while (i >= 0 && ++pick[i] == kidsets[i].size()) pick[i--] = 0;
                    if (i < 0) break;
                }
                return;
            }
            for (int take = 1; take <= left - (gcnt - 1 - idx); ++take) {
                parts[idx] = take;
                comp(idx + 1, left - take);
            }
        };
        comp(0, budget);
    }
}

PlaneGraph base_cycle(int gsize) {
    PlaneGraph g;
    g.rotation.resize(gsize);
    for (int v = 0; v < gsize; ++v) {
        g.rotation[v] = {(v + 1) % gsize, (v - 1 + gsize) % gsize};
        g.outer_face.push_back(v);
    }
    return g;
}

// random non-crossing chords; returns the inner faces (ascending vertex lists)
std::vector<std::vector<int>> add_chords(PlaneGraph& g, int gsize, Rng& rng, double p) {
    std::vector<std::vector<int>> faces;
    std::function<void(std::vector<int>)> split = [&](std::vector<int> f) {
        int m = (int)f.size();
        if (m >= 4 && rng.coin(p)) {
            int i = (int)rng.below(m);
            int j = (int)((i + 2 + rng.below(m - 3)) % m);
            if (i > j) std::swap(i, j);
            if (j - i >= 2 && !(i == 0 && j == m - 1)) {
                int u = f[i], v = f[j];
                if (!g.has_edge(u, v)) {
                    int pos_u = g.rot_index(u, f[(i - 1 + m) % m]);
                    int pos_v = g.rot_index(v, f[(j - 1 + m) % m]);
                    g.insert_arc(u, v, pos_u);
                    g.insert_arc(v, u, pos_v);
                    std::vector<int> A(f.begin() + i, f.begin() + j + 1);
                    std::vector<int> B(f.begin(), f.begin() + i + 1);
                    B.insert(B.end(), f.begin() + j, f.end());
                    split(std::move(A));
                    split(std::move(B));
                    return;
                }
            }
        }
        faces.push_back(std::move(f));
    };
    std::vector<int> whole(gsize);
    for (int i = 0; i < gsize; ++i) whole[i] = i;
    split(std::move(whole));
    return faces;
}

void delete_random_attachments(PlaneGraph& g, int gsize, Rng& rng, double p) {
    // group inner vertices into components
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = gsize; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> st{s};
        comp[s] = nc;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            for (int v : g.rotation[u])
                if (v >= gsize && comp[v] < 0) {
                    comp[v] = nc;
                    st.push_back(v);
                }
        }
        ++nc;
    }
    std::vector<std::vector<std::pair<int, int>>> attach(nc);
    for (int t = gsize; t < n; ++t)
        for (int w : g.rotation[t])
            if (w < gsize) attach[comp[t]].push_back({t, w});
    for (auto& edges : attach) {
        if (edges.empty()) continue;
        long keep = rng.below((long)edges.size());
        for (long i = 0; i < (long)edges.size(); ++i) {
            if (i == keep) continue;
            if (!rng.coin(p)) continue;
            auto [t, w] = edges[i];
            g.erase_arc(t, w);
            g.erase_arc(w, t);
        }
    }
}

void expand_blocks(PlaneGraph& g, int gsize, Rng& rng) {
    int n = g.vertex_count();
    std::vector<char> chosen(n, 0);
    std::vector<int> order;
    for (int t = gsize; t < n; ++t) order.push_back(t);
    std::shuffle(order.begin(), order.end(), rng.eng);
    for (int t : order) {
        int tdeg = 0;
        bool nb_chosen = false;
        for (int v : g.rotation[t])
            if (v >= gsize) {
                ++tdeg;
                if (chosen[v]) nb_chosen = true;
            }
        if (tdeg >= 3 && !nb_chosen && rng.coin(0.6)) chosen[t] = 1;
    }
    for (int t = gsize; t < n; ++t) {
        if (!chosen[t]) continue;
        // remove the F edges of t
        std::vector<int> fnb;
        for (int v : g.rotation[t])
            if (v < gsize) fnb.push_back(v);
        for (int w : fnb) {
            g.erase_arc(t, w);
            g.erase_arc(w, t);
        }
        std::vector<int> leaves = g.rotation[t];
        int k = (int)leaves.size();
        UPS_CHECK(k >= 3, "block expansion needs three leaves");
        std::vector<int> pos(k);
        for (int i = 0; i < k; ++i) pos[i] = g.rot_index(leaves[i], t);
        for (int i = 0; i < k; ++i) {
            g.erase_arc(leaves[i], t);
            g.erase_arc(t, leaves[i]);
        }
        // random non-crossing chords of the polygon 0..k-1 (by leaf index)
        std::vector<std::pair<int, int>> chords;
        std::function<void(int, int)> chordify = [&](int lo, int hi) {
            if (hi - lo < 3) return;
            if (rng.coin(0.4)) {
                int i = lo + (int)rng.below(hi - lo - 1);
                int j = i + 2 + (int)rng.below(hi - i - 2 + 1);
                if (j <= hi && j - i >= 2 && !(i == lo && j == hi)) {
                    chords.push_back({i, j});
                    chordify(i, j);
                    chordify(j, hi);
                    return;
                }
            }
        };
        chordify(0, k - 1);
        // rotation at leaf i: neighbors in decreasing polygon distance
        for (int i = 0; i < k; ++i) {
            std::vector<int> others;
            for (int d = 1; d < k; ++d) others.push_back((i + d) % k);
            std::vector<int> mine;
            for (int q : others) {
                bool edge = (q == (i + 1) % k) || (q == (i - 1 + k) % k);
                for (auto [a, b] : chords)
                    if ((a == i && b == q) || (a == q && b == i)) edge = true;
                if (edge) mine.push_back(q);
            }
            for (size_t x = 0; x < mine.size(); ++x)
                g.insert_arc(leaves[i], leaves[mine[x]], pos[i] + (int)x);
        }
        // planarity check; flip the order at every leaf if wrong
        long V = 0;
        for (const auto& r : g.rotation)
            if (!r.empty()) ++V;
        if ((long)g.trace_faces().size() != g.edge_count() - V + 2) {
            for (int i = 0; i < k; ++i) {
                std::vector<int> mine;
                const auto& r = g.rotation[leaves[i]];
                // collect the inserted run and reverse it
                int cnt = 0;
                for (int q = 0; q < k; ++q) {
                    bool edge = (q == (i + 1) % k) || (q == (i - 1 + k) % k);
                    for (auto [a, b] : chords)
                        if ((a == i && b == q) || (a == q && b == i)) edge = true;
                    if (edge) ++cnt;
                }
                std::reverse(g.rotation[leaves[i]].begin() + pos[i],
                             g.rotation[leaves[i]].begin() + pos[i] + cnt);
                (void)r;
                (void)mine;
            }
            long V2 = 0;
            for (const auto& r : g.rotation)
                if (!r.empty()) ++V2;
            UPS_CHECK((long)g.trace_faces().size() == g.edge_count() - V2 + 2,
                      "block expansion broke planarity");
        }
    }
    // compact ids (drop the removed star centers)
    std::vector<int> remap(n, -1);
    int nn = 0;
    for (int v = 0; v < n; ++v)
        if (!chosen[v]) remap[v] = nn++;
    PlaneGraph h;
    h.rotation.resize(nn);
    for (int v = 0; v < n; ++v) {
        if (chosen[v]) continue;
        for (int u : g.rotation[v]) h.rotation[remap[v]].push_back(remap[u]);
    }
    for (int v : g.outer_face) h.outer_face.push_back(remap[v]);
    g = std::move(h);
}

}  // namespace

PlaneGraph gen_graph(long n, std::uint64_t seed, InstanceClass klass) {
    UPS_CHECK(n >= 3, "instance generation needs n >= 3");
    Rng rng(seed);

    if (klass == InstanceClass::cycle_tree_triangulated) {
        long m = n <= 3 ? n : rng.in(3, std::max<long>(3, n - 1));
        if (n - m > 0 && m < 3) m = 3;
        PlaneGraph g = base_cycle((int)m);
        std::vector<int> face(m);
        for (int i = 0; i < m; ++i) face[i] = i;
        host_tree(g, face, (int)(n - m), rng);
        g.validate();
        return g;
    }

    // outer graph: cycle + chords
    long gsize = std::max<long>(3, (n * (5 + rng.below(3))) / 10);
    if (gsize > n) gsize = n;
    PlaneGraph g = base_cycle((int)gsize);
    auto faces = add_chords(g, (int)gsize, rng, 0.45);

    // distribute the inner budget among faces
    long budget = n - gsize;
    std::vector<long> share(faces.size(), 0);
    for (long i = 0; i < budget; ++i) share[rng.below((long)faces.size())] += 1;
    for (size_t f = 0; f < faces.size(); ++f) {
        if (share[f] == 0) continue;
        if (faces[f].size() < 3) continue;
        host_tree(g, faces[f], (int)share[f], rng);
    }
    delete_random_attachments(g, (int)gsize, rng, 0.4);
    if (klass == InstanceClass::general) expand_blocks(g, (int)gsize, rng);
    g.validate();
    return g;
}

std::vector<PlaneGraph> enumerate_small_cycle_trees(int max_f, int max_t) {
    std::vector<PlaneGraph> out;
    for (int m = 3; m <= max_f; ++m) {
        for (int tsize = 1; tsize <= max_t; ++tsize) {
            std::vector<RegionNode> regions;
            enum_regions(0, m - 1, tsize - 1, regions);
            std::vector<int> face(m);
            for (int i = 0; i < m; ++i) face[i] = i;
            for (auto& node : regions) {
                PlaneGraph g = base_cycle(m);
                TreeShape shape = materialize(g, node, 0, m - 1, -1, face);
                for (int p = 0; p < m; ++p) {
                    auto list = contrib_at(shape, p);
                    if (list.empty()) continue;
                    int prev = face[(p - 1 + m) % m];
                    int pos = g.rot_index(face[p], prev);
                    for (size_t i = 0; i < list.size(); ++i)
                        g.insert_arc(face[p], list[i], pos + (int)i);
                }
                g.validate();
                out.push_back(std::move(g));
            }
        }
    }
    return out;
}

}  // namespace ups
