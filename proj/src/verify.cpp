#include "ups/verify.hpp"

#include <algorithm>

namespace ups {

std::string Certificate::summary() const {
    if (pass()) return "pass";
    std::string s = "fail:";
    if (!unassigned.empty()) s += " " + std::to_string(unassigned.size()) + " unplaced";
    if (!off_set.empty()) s += " " + std::to_string(off_set.size()) + " off-set";
    if (!coincidences.empty()) s += " " + std::to_string(coincidences.size()) + " coincident";
    if (!crossings.empty()) s += " " + std::to_string(crossings.size()) + " crossing pairs";
    return s;
}

Certificate verify_drawing(const PlaneGraph& g, const Drawing& d, const UniversalPointSet& ps) {
    Certificate cert;
    const int n = g.vertex_count();
    std::vector<const Point2*> pos(n, nullptr);
    for (int v = 0; v < n; ++v) {
        auto it = d.assignment.find(v);
        if (it == d.assignment.end()) {
            cert.unassigned.push_back(v);
            continue;
        }
        try {
            pos[v] = &ps.point(it->second);
        } catch (const std::exception&) {
            cert.off_set.push_back(v);
        }
    }
    if (!cert.unassigned.empty() || !cert.off_set.empty()) return cert;

    // injectivity
    {
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (pos[a]->x != pos[b]->x) return pos[a]->x < pos[b]->x;
            return pos[a]->y < pos[b]->y;
        });
        for (int i = 1; i < n; ++i)
            if (*pos[order[i - 1]] == *pos[order[i]])
                cert.coincidences.push_back({order[i - 1], order[i]});
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : g.rotation[u])
            if (u < v) edges.push_back({u, v});

    // bounding boxes cut the all-pairs cost
    struct BBox {
        const Rational *xlo, *xhi, *ylo, *yhi;
    };
    std::vector<BBox> box(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        const Point2 *a = pos[edges[i].first], *b = pos[edges[i].second];
        box[i].xlo = a->x <= b->x ? &a->x : &b->x;
        box[i].xhi = a->x <= b->x ? &b->x : &a->x;
        box[i].ylo = a->y <= b->y ? &a->y : &b->y;
        box[i].yhi = a->y <= b->y ? &b->y : &a->y;
    }
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            if (*box[i].xhi < *box[j].xlo || *box[j].xhi < *box[i].xlo ||
                *box[i].yhi < *box[j].ylo || *box[j].yhi < *box[i].ylo)
                continue;
            auto [a1, b1] = edges[i];
            auto [a2, b2] = edges[j];
            SegRel rel = segments_cross({*pos[a1], *pos[b1]}, {*pos[a2], *pos[b2]});
            if (rel == SegRel::cross || rel == SegRel::overlap || rel == SegRel::touch_interior)
                cert.crossings.push_back({a1, b1, a2, b2, rel});
        }
    }
    return cert;
}

}  // namespace ups
