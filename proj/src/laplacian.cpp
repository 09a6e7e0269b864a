#include "sandpile/laplacian.hpp"

#include <algorithm>
#include <stdexcept>

namespace sandpile {

RootedGraph::RootedGraph(Multigraph g, int root_) : graph(std::move(g)), root(root_) {
    if (root < 0 || root >= graph.vertex_count()) throw std::invalid_argument("RootedGraph: root out of range");
    if (!graph.is_connected()) throw std::invalid_argument("RootedGraph: graph must be connected");
}

std::vector<int> RootedGraph::non_root_vertices() const {
    std::vector<int> out;
    out.reserve(graph.vertex_count() - 1);
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (v != root) out.push_back(v);
    return out;
}

int RootedGraph::config_index(int v) const {
    if (v < 0 || v >= graph.vertex_count() || v == root)
        throw std::invalid_argument("config_index: not a non-root vertex");
    return v < root ? v : v - 1;
}

RootedGraph rooted_cone(const Tree& t) { return RootedGraph(cone(t), t.n); }

IntMatrix laplacian(const Multigraph& g) {
    if (g.has_loop()) throw std::invalid_argument("laplacian: graph has a loop");
    const int n = g.vertex_count();
    IntMatrix L(n, n);
    for (const auto& [e, k] : g.edge_multiplicities()) {
        L(e.first, e.first) += k;
        L(e.second, e.second) += k;
        L(e.first, e.second) -= k;
        L(e.second, e.first) -= k;
    }
    return L;
}

IntMatrix reduced_laplacian(const RootedGraph& rg) {
    IntMatrix L = laplacian(rg.graph);
    const int n = rg.graph.vertex_count();
    IntMatrix R(n - 1, n - 1);
    int ri = 0;
    for (int i = 0; i < n; ++i) {
        if (i == rg.root) continue;
        int rj = 0;
        for (int j = 0; j < n; ++j) {
            if (j == rg.root) continue;
            R(ri, rj) = L(i, j);
            ++rj;
        }
        ++ri;
    }
    return R;
}

AbelianGroup sandpile_group(const RootedGraph& rg) { return cokernel(reduced_laplacian(rg)); }

Int spanning_tree_count(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("spanning_tree_count: graph must be connected");
    if (g.has_loop()) throw std::invalid_argument("spanning_tree_count: graph has a loop");
    if (g.vertex_count() == 1) return 1;
    return abs(determinant(reduced_laplacian(RootedGraph(g, 0))));
}

int mu(const AbelianGroup& g) { return g.num_generators(); }

bool verify_leaf_generators(const Tree& t, int v1) {
    auto ls = leaves(t);
    if (!std::binary_search(ls.begin(), ls.end(), v1))
        throw std::invalid_argument("verify_leaf_generators: v1 is not a leaf");
    IntMatrix L = reduced_laplacian(rooted_cone(t));
    std::vector<std::vector<Int>> extra;
    for (int v : ls) {
        if (v == v1) continue;
        std::vector<Int> e(t.n, Int(0));
        e[v] = 1;
        extra.push_back(std::move(e));
    }
    return is_full_image(L, extra);
}

}  // namespace sandpile
