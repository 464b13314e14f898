#pragma once
// File formats: graph, point set and drawing JSON. Rationals serialize as
// canonical "p/q" strings ("p" alone when q = 1).

#include "ups/embed.hpp"
#include "ups/graph.hpp"
#include "ups/pointset.hpp"

#include <string>

namespace ups {

std::string graph_to_json(const PlaneGraph& g);
PlaneGraph graph_from_json(const std::string& text);

std::string pointset_to_json(const UniversalPointSet& ps);
UniversalPointSet pointset_from_json(const std::string& text);

std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ups
