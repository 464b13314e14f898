#pragma once
// SVG output. The only place rationals are converted to floating point.

#include "ups/embed.hpp"
#include "ups/graph.hpp"
#include "ups/pointset.hpp"

#include <string>

namespace ups {

struct RenderOptions {
    bool show_subsets = true;
    bool show_petals = false;
    bool show_labels = false;
};

std::string render_svg(const PlaneGraph& g, const Drawing& d, const UniversalPointSet& ps,
                       const RenderOptions& opt = {});

}  // namespace ups
