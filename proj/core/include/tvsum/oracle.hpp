#pragma once

#include <array>
#include <vector>

#include "tvsum/catdata.hpp"
#include "tvsum/complexes.hpp"

namespace tvsum {

// Triangulation with a branching: order[t][k] is the local vertex in position k.
struct OrderedTriangulation {
  Triangulation tri;
  std::vector<std::array<int, 4>> order;
  std::vector<int> sign;  // orientation of tetrahedron t relative to its order
  bool subdivided = false;
};

// Searches for a branching; falls back to one barycentric subdivision.
OrderedTriangulation order_triangulation(const Triangulation& t);
// One barycentric subdivision (24 pieces per tetrahedron), orientation kept.
Triangulation barycentric_subdivision(const Triangulation& t);

// Edge class -> group element read along the branching direction.
using FlatColoring = std::vector<int>;

bool is_flat(const OrderedTriangulation& ot, const FiniteGroup& g, const FlatColoring& c);
// Flat colorings that are trivial on a fixed spanning tree of the 1-skeleton.
std::vector<FlatColoring> tree_gauge_colorings(const OrderedTriangulation& ot, const FiniteGroup& g);
// Every flat coloring (brute force; small inputs only).
std::vector<FlatColoring> all_flat_colorings(const OrderedTriangulation& ot, const FiniteGroup& g);

FieldElement dw_class_value(const OrderedTriangulation& ot, const FlatColoring& c, const CocycleTable& theta);
// |G|^-V times the sum over all flat colorings.
FieldElement dw_partition(const OrderedTriangulation& ot, const CocycleTable& theta);

}  // namespace tvsum
