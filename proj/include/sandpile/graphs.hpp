#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sandpile {

// Labeled simple tree on vertices 0..n-1. Validated on construction
// (n-1 edges, connected, no loops or parallel edges); immutable afterwards.
struct Tree {
    int n;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted

    Tree(int n, std::vector<std::pair<int, int>> edges);

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;
};

// Undirected multigraph: parallel edges and loops allowed (loops arise
// under contraction). Edges live in a sorted-pair -> multiplicity map, so
// two multigraphs with equal vertex counts and equal edge multisets
// compare equal regardless of insertion order.
class Multigraph {
  public:
    explicit Multigraph(int n);
    Multigraph(int n, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v, int k = 1);

    int vertex_count() const { return n_; }
    int edge_count() const;  // with multiplicity
    int multiplicity(int u, int v) const;
    int degree(int v) const;  // a loop contributes 2
    bool has_loop() const;
    int loop_count() const;

    const std::map<std::pair<int, int>, int>& edge_multiplicities() const { return mult_; }
    std::vector<std::pair<int, int>> edge_list() const;  // expanded with repetition, sorted

    bool is_connected() const;

    // stable textual key: "n|u,v:k|..." over the sorted multiplicity map
    std::string encode() const;

    bool operator==(const Multigraph&) const = default;

  private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::map<std::pair<int, int>, int> mult_;
};

Multigraph to_multigraph(const Tree& t);

Tree path_tree(int n);                // vertices 0..n-1, edges {i, i+1}
Tree star_tree(int n);                // vertex 0 is the center
Tree coconut_tree(int p, int s);      // path 0..p-1 plus s leaves p..p+s-1 attached to p-1

// Cone over a tree: one new vertex adjacent to every tree vertex.
// The cone vertex is always the largest label, t.n.
Multigraph cone(const Tree& t);
// cone(t) with the edge {cone vertex, v} doubled
Multigraph cone_plus(const Tree& t, int v);

Multigraph delete_edge(const Multigraph& g, int u, int v);
// Merges the endpoints (lowest label survives, remaining vertices are
// relabeled densely); parallel copies of the contracted edge become loops.
Multigraph contract_edge(const Multigraph& g, int u, int v);

// Degree-1 vertices; rejects the single-vertex tree.
std::vector<int> leaves(const Tree& t);

// Tree with one leaf removed, remaining vertices relabeled densely.
Tree delete_leaf(const Tree& t, int leaf);

// Canonical byte string: equal for two trees iff they are isomorphic.
// Rooted at the centroid; for bicentroidal trees the lexicographically
// smaller of the two rooted encodings wins.
std::string canonical_code(const Tree& t);

// One representative per isomorphism class, sorted by canonical_code.
// Grows trees vertex-by-vertex with canonical deduplication.
std::vector<Tree> enumerate_trees(int n, int max_n = 12);

// Generalized tree shift at the ordered vertex pair (x, y): valid when
// every interior vertex of the x-y path has degree two; then the
// neighbors of y other than its path-neighbor toward x migrate to x.
// Returns the shifted tree, or nullopt for an invalid pair. The caller
// distinguishes "valid but isomorphic" by comparing canonical codes.
std::optional<Tree> generalized_tree_shift(const Tree& t, int x, int y);

// Named tree family, as parsed from CLI strings.
struct TreeFamily {
    enum class Kind { path, star, coconut, explicit_tree };
    Kind kind;
    int a = 0;  // path/star: n; coconut: p
    int b = 0;  // coconut: s
    std::optional<Tree> tree;  // explicit_tree

    Tree realize() const;
    std::string label() const;
};

}  // namespace sandpile
