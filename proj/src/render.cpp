#include "ups/render.hpp"

#include <cstdio>
#include <sstream>

namespace ups {

namespace {

double to_double(const Rational& r) {
    return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

}  // namespace

std::string render_svg(const PlaneGraph& g, const Drawing& d, const UniversalPointSet& ps,
                       const RenderOptions& opt) {
    double R = to_double(ps.radius);
    double pad = R * 0.05;
    double w = 2 * R + 2 * pad, h = R + 2 * pad;
    auto X = [&](const Point2& p) { return to_double(p.x) + R + pad; };
    auto Y = [&](const Point2& p) { return h - (to_double(p.y) + pad); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(w) << " " << num(h)
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (opt.show_subsets) {
        svg << "<g fill=\"#c8c8c8\">\n";
        for (auto& [j, sub] : ps.subsets) {
            auto dot = [&](const Point2& p) {
                svg << "<circle cx=\"" << num(X(p)) << "\" cy=\"" << num(Y(p)) << "\" r=\""
                    << num(R * 0.0015) << "\"/>\n";
            };
            dot(sub.center);
            for (int sigma = 0; sigma < 3; ++sigma)
                for (auto& p : sub.seg(sigma)) dot(p);
            if (opt.show_petals) {
                for (int sigma = 0; sigma < 3; ++sigma)
                    for (auto& pp : sub.petals(sigma)) {
                        dot(pp.l);
                        dot(pp.r);
                    }
            }
        }
        svg << "</g>\n";
    }
    svg << "<g fill=\"#888888\">\n";
    for (auto& p : ps.outer)
        svg << "<circle cx=\"" << num(X(p)) << "\" cy=\"" << num(Y(p)) << "\" r=\""
            << num(R * 0.004) << "\"/>\n";
    svg << "</g>\n";

    svg << "<g stroke=\"#1f4f9f\" stroke-width=\"" << num(R * 0.002) << "\" fill=\"none\">\n";
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.rotation[u]) {
            if (u >= v) continue;
            const Point2& a = ps.point(d.assignment.at(u));
            const Point2& b = ps.point(d.assignment.at(v));
            svg << "<line x1=\"" << num(X(a)) << "\" y1=\"" << num(Y(a)) << "\" x2=\"" << num(X(b))
                << "\" y2=\"" << num(Y(b)) << "\"/>\n";
        }
    }
    svg << "</g>\n<g fill=\"#c03030\">\n";
    for (auto& [v, ref] : d.assignment) {
        const Point2& p = ps.point(ref);
        svg << "<circle cx=\"" << num(X(p)) << "\" cy=\"" << num(Y(p)) << "\" r=\""
            << num(R * 0.005) << "\"/>\n";
        if (opt.show_labels)
            svg << "<text x=\"" << num(X(p) + R * 0.006) << "\" y=\"" << num(Y(p)) << "\" font-size=\""
                << num(R * 0.02) << "\">" << v << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace ups
