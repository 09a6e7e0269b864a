#include "sandpile/graphs.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sandpile {

namespace {

std::pair<int, int> norm_edge(int u, int v) { return u <= v ? std::pair{u, v} : std::pair{v, u}; }

}  // namespace

Tree::Tree(int n_, std::vector<std::pair<int, int>> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 1) throw std::invalid_argument("Tree: vertex count must be positive");
    if (edges.size() != static_cast<size_t>(n - 1)) throw std::invalid_argument("Tree: needs exactly n-1 edges");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("Tree: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Tree: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Tree: parallel edge");
    // n-1 edges + connectivity = acyclic
    std::vector<std::vector<int>> adj = adjacency();
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++visited;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    if (visited != n) throw std::invalid_argument("Tree: not connected");
}

std::vector<int> Tree::degrees() const {
    std::vector<int> d(n, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::vector<std::vector<int>> Tree::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Multigraph: vertex count must be positive");
}

Multigraph::Multigraph(int n, const std::vector<std::pair<int, int>>& edges) : Multigraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Multigraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Multigraph: vertex out of range");
}

void Multigraph::add_edge(int u, int v, int k) {
    check_vertex(u);
    check_vertex(v);
    if (k < 1) throw std::invalid_argument("Multigraph: multiplicity must be positive");
    mult_[norm_edge(u, v)] += k;
}

int Multigraph::edge_count() const {
    int total = 0;
    for (const auto& [e, k] : mult_) total += k;
    return total;
}

int Multigraph::multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto it = mult_.find(norm_edge(u, v));
    return it == mult_.end() ? 0 : it->second;
}

int Multigraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (const auto& [e, k] : mult_) {
        if (e.first == v) d += k;
        if (e.second == v) d += k;  // loop pairs (v,v) get counted twice
    }
    return d;
}

bool Multigraph::has_loop() const {
    for (const auto& [e, k] : mult_)
        if (e.first == e.second) return true;
    return false;
}

int Multigraph::loop_count() const {
    int total = 0;
    for (const auto& [e, k] : mult_)
        if (e.first == e.second) total += k;
    return total;
}

std::vector<std::pair<int, int>> Multigraph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [e, k] : mult_)
        for (int i = 0; i < k; ++i) out.push_back(e);
    return out;
}

bool Multigraph::is_connected() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [e, k] : mult_)
        if (e.first != e.second) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
    std::vector<bool> seen(n_, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++visited;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return visited == n_;
}

std::string Multigraph::encode() const {
    std::ostringstream out;
    out << n_;
    for (const auto& [e, k] : mult_) out << "|" << e.first << "," << e.second << ":" << k;
    return out.str();
}

Multigraph to_multigraph(const Tree& t) {
    Multigraph g(t.n);
    for (auto [u, v] : t.edges) g.add_edge(u, v);
    return g;
}

Tree path_tree(int n) {
    if (n < 1) throw std::invalid_argument("path_tree: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n, std::move(edges));
}

Tree star_tree(int n) {
    if (n < 2) throw std::invalid_argument("star_tree: n must be >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Tree(n, std::move(edges));
}

Tree coconut_tree(int p, int s) {
    if (p < 1 || s < 1) throw std::invalid_argument("coconut_tree: p and s must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < s; ++i) edges.emplace_back(p - 1, p + i);
    return Tree(p + s, std::move(edges));
}

Multigraph cone(const Tree& t) {
    Multigraph g(t.n + 1);
    for (auto [u, v] : t.edges) g.add_edge(u, v);
    for (int v = 0; v < t.n; ++v) g.add_edge(v, t.n);
    return g;
}

Multigraph cone_plus(const Tree& t, int v) {
    if (v < 0 || v >= t.n) throw std::invalid_argument("cone_plus: vertex out of range");
    Multigraph g = cone(t);
    g.add_edge(v, t.n);
    return g;
}

Multigraph delete_edge(const Multigraph& g, int u, int v) {
    if (g.multiplicity(u, v) < 1) throw std::invalid_argument("delete_edge: edge not present");
    Multigraph out(g.vertex_count());
    for (const auto& [e, k] : g.edge_multiplicities()) {
        int keep = (e == norm_edge(u, v)) ? k - 1 : k;
        if (keep > 0) out.add_edge(e.first, e.second, keep);
    }
    return out;
}

Multigraph contract_edge(const Multigraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("contract_edge: cannot contract a loop");
    if (g.multiplicity(u, v) < 1) throw std::invalid_argument("contract_edge: edge not present");
    const int lo = std::min(u, v), hi = std::max(u, v);
    auto relabel = [&](int w) {
        if (w == hi) w = lo;
        return w > hi ? w - 1 : w;
    };
    Multigraph out(g.vertex_count() - 1);
    for (const auto& [e, k] : g.edge_multiplicities()) {
        if (e == std::pair{lo, hi}) {
            if (k > 1) out.add_edge(relabel(lo), relabel(lo), k - 1);  // surviving parallels become loops
        } else {
            out.add_edge(relabel(e.first), relabel(e.second), k);
        }
    }
    return out;
}

std::vector<int> leaves(const Tree& t) {
    if (t.n < 2) throw std::invalid_argument("leaves: tree must have at least 2 vertices");
    std::vector<int> out;
    auto deg = t.degrees();
    for (int v = 0; v < t.n; ++v)
        if (deg[v] == 1) out.push_back(v);
    return out;
}

Tree delete_leaf(const Tree& t, int leaf) {
    if (leaf < 0 || leaf >= t.n) throw std::invalid_argument("delete_leaf: vertex out of range");
    if (t.n < 2 || t.degrees()[leaf] != 1) throw std::invalid_argument("delete_leaf: vertex is not a leaf");
    std::vector<std::pair<int, int>> edges;
    auto relabel = [&](int w) { return w > leaf ? w - 1 : w; };
    for (auto [u, v] : t.edges)
        if (u != leaf && v != leaf) edges.emplace_back(relabel(u), relabel(v));
    return Tree(t.n - 1, std::move(edges));
}

std::string canonical_code(const Tree& t) {
    if (t.n == 1) return "()";
    auto adj = t.adjacency();

    // centroid(s): minimize the largest component left by removing the vertex
    std::vector<int> size(t.n, 1), maxcomp(t.n, 0), order, parent(t.n, -1);
    order.reserve(t.n);
    {
        std::vector<int> stack = {0};
        std::vector<bool> seen(t.n, false);
        seen[0] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = v;
                    stack.push_back(w);
                }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        for (int w : adj[v])
            if (w != parent[v]) {
                size[v] += size[w];
                maxcomp[v] = std::max(maxcomp[v], size[w]);
            }
        maxcomp[v] = std::max(maxcomp[v], t.n - size[v]);
    }
    int best = t.n;
    for (int v = 0; v < t.n; ++v) best = std::min(best, maxcomp[v]);
    std::vector<int> centroids;
    for (int v = 0; v < t.n; ++v)
        if (maxcomp[v] == best) centroids.push_back(v);

    std::function<std::string(int, int)> enc = [&](int v, int from) {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != from) kids.push_back(enc(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        return s;
    };

    std::string code = enc(centroids[0], -1);
    if (centroids.size() == 2) code = std::min(code, enc(centroids[1], -1));
    return code;
}

std::vector<Tree> enumerate_trees(int n, int max_n) {
    if (n < 1 || n > max_n) throw std::invalid_argument("enumerate_trees: n out of bounds");
    std::vector<Tree> level = {Tree(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Tree> next;
        for (const Tree& t : level)
            for (int v = 0; v < t.n; ++v) {
                auto edges = t.edges;
                edges.emplace_back(v, t.n);
                Tree grown(t.n + 1, std::move(edges));
                std::string code = canonical_code(grown);
                next.emplace(std::move(code), std::move(grown));
            }
        std::vector<Tree> out;
        out.reserve(next.size());
        for (auto& [code, t] : next) out.push_back(std::move(t));
        level = std::move(out);
    }
    return level;
}

std::optional<Tree> generalized_tree_shift(const Tree& t, int x, int y) {
    if (x < 0 || x >= t.n || y < 0 || y >= t.n) throw std::invalid_argument("generalized_tree_shift: vertex out of range");
    if (x == y) throw std::invalid_argument("generalized_tree_shift: x and y must differ");
    auto adj = t.adjacency();
    auto deg = t.degrees();

    // unique x-y path
    std::vector<int> parent(t.n, -2);
    parent[x] = -1;
    std::vector<int> stack = {x};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == y) break;
        for (int w : adj[v])
            if (parent[w] == -2) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    std::vector<int> path;
    for (int v = y; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());  // x ... y

    for (size_t i = 1; i + 1 < path.size(); ++i)
        if (deg[path[i]] != 2) return std::nullopt;

    int xp = path[path.size() - 2];  // y's neighbor toward x; xp == x when adjacent
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges) {
        if (u == y && v != xp)
            edges.emplace_back(std::min(x, v), std::max(x, v));
        else if (v == y && u != xp)
            edges.emplace_back(std::min(x, u), std::max(x, u));
        else
            edges.emplace_back(u, v);
    }
    return Tree(t.n, std::move(edges));
}

Tree TreeFamily::realize() const {
    switch (kind) {
        case Kind::path:
            return path_tree(a);
        case Kind::star:
            return star_tree(a);
        case Kind::coconut:
            return coconut_tree(a, b);
        case Kind::explicit_tree:
            if (!tree) throw std::invalid_argument("TreeFamily: missing explicit tree");
            return *tree;
    }
    throw std::logic_error("TreeFamily: bad kind");
}

std::string TreeFamily::label() const {
    switch (kind) {
        case Kind::path:
            return "path:" + std::to_string(a);
        case Kind::star:
            return "star:" + std::to_string(a);
        case Kind::coconut:
            return "coconut:" + std::to_string(a) + "," + std::to_string(b);
        case Kind::explicit_tree:
            return "file";
    }
    return "?";
}

}  // namespace sandpile
