#pragma once

#include <utility>
#include <vector>

#include "sandpile/graphs.hpp"
#include "sandpile/poly.hpp"

namespace sandpile {

// Tutte polynomial of a connected multigraph via deletion-contraction.
// Loops and bridges come off as y/x factors, cut vertices split the graph
// into blocks whose polynomials multiply, and the recursion proper acts on
// a highest-multiplicity parallel class at a time. Identical labeled
// subgraphs inside one call are deduplicated.
BiPoly tutte(const Multigraph& g);

// T(1, y), computed as the full bivariate polynomial specialized at x = 1.
UniPoly tutte_1y(const Multigraph& g);

// T(1, y) by a separate single-edge recursion that never builds the
// bivariate polynomial. Exists as a second, independent code path; must
// agree with tutte_1y.
UniPoly tutte_1y_direct(const Multigraph& g);

// Activity generating function: sum of x^{internal activity} y^{external
// activity} over the spanning trees, with activities taken against the
// given precedence order (earlier = smaller). edge_order must be a
// permutation of the edge multiset. Enumerates all spanning trees, so the
// edge count is capped.
BiPoly tutte_by_activities(const Multigraph& g, const std::vector<std::pair<int, int>>& edge_order,
                           int max_edges = 24);

// Biconnected blocks of a connected multigraph, densely relabeled; a loop
// is its own single-vertex block. The Tutte polynomial of the graph is the
// product over the blocks.
std::vector<Multigraph> cut_vertex_factor(const Multigraph& g);

}  // namespace sandpile
