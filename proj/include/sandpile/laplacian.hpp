#pragma once

#include <vector>

#include "sandpile/graphs.hpp"
#include "sandpile/linalg.hpp"

namespace sandpile {

// A connected multigraph with a chosen root vertex. For cones the root
// defaults to the cone vertex (the largest label).
struct RootedGraph {
    Multigraph graph;
    int root;

    RootedGraph(Multigraph g, int root);

    std::vector<int> non_root_vertices() const;  // ascending
    int config_index(int v) const;               // position of v among non-root vertices
};

RootedGraph rooted_cone(const Tree& t);

// Graph Laplacian: diagonal = degrees, off-diagonal = -multiplicity.
// Rejects loops.
IntMatrix laplacian(const Multigraph& g);

// Laplacian with the root row and column removed.
IntMatrix reduced_laplacian(const RootedGraph& rg);

// Cokernel of the reduced Laplacian; its order equals the number of
// spanning trees.
AbelianGroup sandpile_group(const RootedGraph& rg);

// |det| of a reduced Laplacian (matrix-tree); root choice is immaterial.
Int spanning_tree_count(const Multigraph& g);

// Minimal number of generators = number of invariant factors.
int mu(const AbelianGroup& g);

// True iff the columns of the reduced Laplacian of cone(t), rooted at the
// cone vertex, together with the basis vectors of the leaves other than
// v1 generate the full lattice.
bool verify_leaf_generators(const Tree& t, int v1);

}  // namespace sandpile
