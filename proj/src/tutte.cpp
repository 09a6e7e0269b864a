#include "sandpile/tutte.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sandpile {

namespace {

Multigraph strip_loops(const Multigraph& g) {
    Multigraph s(g.vertex_count());
    for (const auto& [e, k] : g.edge_multiplicities())
        if (e.first != e.second) s.add_edge(e.first, e.second, k);
    return s;
}

// remove an entire parallel class
Multigraph delete_class(const Multigraph& g, std::pair<int, int> e) {
    Multigraph out(g.vertex_count());
    for (const auto& [f, k] : g.edge_multiplicities())
        if (f != e) out.add_edge(f.first, f.second, k);
    return out;
}

// contract an entire parallel class (no leftover loops)
Multigraph contract_class(const Multigraph& g, std::pair<int, int> e) {
    return strip_loops(contract_edge(g, e.first, e.second));
}

// 1 + y + ... + y^{k-1}
BiPoly geometric_y(int k) {
    BiPoly p;
    for (int j = 0; j < k; ++j) p.add(0, j, 1);
    return p;
}

struct TutteEngine {
    std::map<std::string, BiPoly> memo;

    BiPoly run(const Multigraph& g) {
        if (g.edge_count() == 0) return BiPoly::one();
        const std::string key = g.encode();
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        BiPoly result;
        if (g.has_loop()) {
            result = run(strip_loops(g)).times_y(g.loop_count());
        } else {
            auto blocks = cut_vertex_factor(g);
            if (blocks.size() > 1) {
                result = BiPoly::one();
                for (const Multigraph& b : blocks) result = result * run(b);
            } else if (g.vertex_count() == 2) {
                // single parallel class: one bridge plus loop contractions
                int k = g.edge_count();
                result = BiPoly::x();
                for (int j = 1; j < k; ++j) result.add(0, j, 1);
            } else {
                // 2-connected on >= 3 vertices: act on a heaviest parallel class
                std::pair<int, int> e{-1, -1};
                int best = 0;
                for (const auto& [f, k] : g.edge_multiplicities())
                    if (k > best) {
                        best = k;
                        e = f;
                    }
                result = run(delete_class(g, e)) + geometric_y(best) * run(contract_class(g, e));
            }
        }
        memo.emplace(key, result);
        return result;
    }
};

struct Tutte1yEngine {
    std::map<std::string, UniPoly> memo;

    // textbook single-edge recursion at x = 1: bridges contract silently
    UniPoly run(const Multigraph& g) {
        if (g.edge_count() == 0) return UniPoly::one();
        const std::string key = g.encode();
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        UniPoly result;
        auto e = g.edge_multiplicities().begin()->first;
        if (e.first == e.second) {
            result = run(delete_edge(g, e.first, e.second)) * UniPoly::y();
        } else {
            Multigraph del = delete_edge(g, e.first, e.second);
            Multigraph con = contract_edge(g, e.first, e.second);
            if (del.is_connected())
                result = run(del) + run(con);
            else
                result = run(con);  // bridge: the x factor is 1
        }
        memo.emplace(key, result);
        return result;
    }
};

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

BiPoly tutte(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("tutte: graph must be connected");
    TutteEngine engine;
    return engine.run(g);
}

UniPoly tutte_1y(const Multigraph& g) { return tutte(g).at_x1(); }

UniPoly tutte_1y_direct(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("tutte_1y_direct: graph must be connected");
    Tutte1yEngine engine;
    return engine.run(g);
}

std::vector<Multigraph> cut_vertex_factor(const Multigraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("cut_vertex_factor: graph must be connected");
    const int n = g.vertex_count();

    // expanded non-loop edges with ids; loops become singleton blocks below
    std::vector<std::pair<int, int>> edges;
    int loops_total = 0;
    for (const auto& [e, k] : g.edge_multiplicities()) {
        if (e.first == e.second) {
            loops_total += k;
            continue;
        }
        for (int i = 0; i < k; ++i) edges.push_back(e);
    }
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other endpoint, edge id)
    for (size_t id = 0; id < edges.size(); ++id) {
        adj[edges[id].first].emplace_back(edges[id].second, static_cast<int>(id));
        adj[edges[id].second].emplace_back(edges[id].first, static_cast<int>(id));
    }

    std::vector<int> disc(n, 0), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> comps;  // edge ids per biconnected component
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
        disc[v] = low[v] = ++timer;
        for (auto [w, id] : adj[v]) {
            if (id == parent_edge) continue;
            if (disc[w] == 0) {
                edge_stack.push_back(id);
                dfs(w, id);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<int> comp;
                    while (true) {
                        int top = edge_stack.back();
                        edge_stack.pop_back();
                        comp.push_back(top);
                        if (top == id) break;
                    }
                    comps.push_back(std::move(comp));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back(id);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    if (!edges.empty() || n > 0) dfs(0, -1);

    std::vector<Multigraph> blocks;
    for (const auto& comp : comps) {
        std::vector<int> verts;
        for (int id : comp) {
            verts.push_back(edges[id].first);
            verts.push_back(edges[id].second);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        Multigraph b(static_cast<int>(verts.size()));
        auto idx = [&](int v) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
        };
        for (int id : comp) b.add_edge(idx(edges[id].first), idx(edges[id].second));
        blocks.push_back(std::move(b));
    }
    for (const auto& [e, k] : g.edge_multiplicities())
        if (e.first == e.second)
            for (int i = 0; i < k; ++i) blocks.push_back(Multigraph(1, {{0, 0}}));

    std::sort(blocks.begin(), blocks.end(),
              [](const Multigraph& a, const Multigraph& b) { return a.encode() < b.encode(); });
    return blocks;
}

BiPoly tutte_by_activities(const Multigraph& g, const std::vector<std::pair<int, int>>& edge_order,
                           int max_edges) {
    if (!g.is_connected()) throw std::invalid_argument("tutte_by_activities: graph must be connected");
    const int m = g.edge_count();
    if (m > max_edges) throw std::invalid_argument("tutte_by_activities: edge count exceeds bound");
    {
        auto sorted_order = edge_order;
        for (auto& [u, v] : sorted_order)
            if (u > v) std::swap(u, v);
        std::sort(sorted_order.begin(), sorted_order.end());
        if (sorted_order != g.edge_list())
            throw std::invalid_argument("tutte_by_activities: edge_order is not a permutation of the edges");
    }

    const int n = g.vertex_count();
    // edge id = precedence rank
    std::vector<std::pair<int, int>> edges = edge_order;

    auto is_spanning = [&](const std::vector<int>& ids) {
        DisjointSet ds(n);
        int merges = 0;
        for (int id : ids)
            if (ds.unite(edges[id].first, edges[id].second)) ++merges;
        return merges == n - 1 && static_cast<int>(ids.size()) == n - 1;
    };

    BiPoly result;
    if (n == 1) {
        // no spanning edges; every loop is externally active
        result.add(0, m, 1);
        return result;
    }

    std::vector<int> choice(n - 1);
    std::iota(choice.begin(), choice.end(), 0);
    for (;;) {
        if (is_spanning(choice)) {
            std::vector<bool> in_tree(m, false);
            for (int id : choice) in_tree[id] = true;

            auto swapped_spanning = [&](int out_id, int in_id) {
                std::vector<int> ids;
                ids.reserve(n - 1);
                for (int id : choice)
                    if (id != out_id) ids.push_back(id);
                ids.push_back(in_id);
                return is_spanning(ids);
            };

            int internal = 0, external = 0;
            for (int e : choice) {
                bool active = true;
                for (int f = 0; f < e && active; ++f)
                    if (!in_tree[f] && swapped_spanning(e, f)) active = false;
                if (active) ++internal;
            }
            for (int f = 0; f < m; ++f) {
                if (in_tree[f]) continue;
                bool active = true;
                for (int e : choice) {
                    if (e < f && swapped_spanning(e, f)) {
                        active = false;
                        break;
                    }
                }
                if (active) ++external;
            }
            result.add(internal, external, 1);
        }
        // next (n-1)-subset of {0..m-1}
        int i = n - 2;
        while (i >= 0 && choice[i] == m - (n - 1) + i) --i;
        if (i < 0) break;
        ++choice[i];
        for (int j = i + 1; j < n - 1; ++j) choice[j] = choice[j - 1] + 1;
    }
    return result;
}

}  // namespace sandpile
