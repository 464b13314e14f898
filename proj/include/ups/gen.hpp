#pragma once
// Seeded instance generators and the systematic small-instance enumerator.
// Generators are validated post hoc by the graph module rather than proven
// correct by construction.

#include "ups/graph.hpp"

#include <cstdint>

namespace ups {

enum class InstanceClass { cycle_tree_triangulated, forest_inner, general };
const char* to_string(InstanceClass c);
InstanceClass instance_class_from_string(const std::string& s);

// A valid embedded 2-outerplanar instance with about n vertices (exact for
// the tree classes; the general class may shrink slightly when blocks are
// expanded in place of their star centers).
PlaneGraph gen_graph(long n, std::uint64_t seed, InstanceClass klass);

// All inner-triangulated cycle-tree instances with |F| <= max_f and
// 1 <= |T| <= max_t.
std::vector<PlaneGraph> enumerate_small_cycle_trees(int max_f, int max_t);

}  // namespace ups
