#include "sandpile/chipfiring.hpp"

#include <stdexcept>

namespace sandpile {

namespace {

// Firing data for the non-root vertices: degrees, neighbor lists with
// multiplicities (non-root neighbors only), and the root incidence.
struct FiringTable {
    std::vector<long long> deg;
    std::vector<std::vector<std::pair<int, long long>>> nbrs;  // (config index, multiplicity)
    std::vector<long long> root_edges;

    explicit FiringTable(const RootedGraph& rg) {
        if (rg.graph.has_loop()) throw std::invalid_argument("chip firing: graph has a loop");
        const int m = rg.graph.vertex_count() - 1;
        deg.assign(m, 0);
        nbrs.assign(m, {});
        root_edges.assign(m, 0);
        for (const auto& [e, k] : rg.graph.edge_multiplicities()) {
            auto [u, v] = e;
            if (u == rg.root) {
                deg[rg.config_index(v)] += k;
                root_edges[rg.config_index(v)] += k;
            } else if (v == rg.root) {
                deg[rg.config_index(u)] += k;
                root_edges[rg.config_index(u)] += k;
            } else {
                int iu = rg.config_index(u), iv = rg.config_index(v);
                deg[iu] += k;
                deg[iv] += k;
                nbrs[iu].emplace_back(iv, k);
                nbrs[iv].emplace_back(iu, k);
            }
        }
    }
};

void check_config(const RootedGraph& rg, const ChipConfig& c) {
    if (c.size() != static_cast<size_t>(rg.graph.vertex_count() - 1))
        throw std::invalid_argument("chip config has wrong length");
    for (long long x : c)
        if (x < 0) throw std::invalid_argument("chip config has a negative entry");
}

void stabilize_in_place(const FiringTable& ft, ChipConfig& c) {
    const int m = static_cast<int>(c.size());
    for (;;) {
        int v = -1;
        for (int i = 0; i < m; ++i)
            if (c[i] >= ft.deg[i]) {
                v = i;
                break;
            }
        if (v < 0) return;
        c[v] -= ft.deg[v];
        for (auto [w, k] : ft.nbrs[v]) c[w] += k;
    }
}

}  // namespace

bool is_stable(const RootedGraph& rg, const ChipConfig& c) {
    check_config(rg, c);
    FiringTable ft(rg);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] >= ft.deg[i]) return false;
    return true;
}

ChipConfig fire(const RootedGraph& rg, const ChipConfig& c, int v) {
    check_config(rg, c);
    FiringTable ft(rg);
    int i = rg.config_index(v);
    if (c[i] < ft.deg[i]) throw std::invalid_argument("fire: vertex is not ready to fire");
    ChipConfig out = c;
    out[i] -= ft.deg[i];
    for (auto [w, k] : ft.nbrs[i]) out[w] += k;
    return out;
}

ChipConfig stabilize(const RootedGraph& rg, ChipConfig c) {
    check_config(rg, c);
    FiringTable ft(rg);
    stabilize_in_place(ft, c);
    return c;
}

bool is_recurrent(const RootedGraph& rg, const ChipConfig& c) {
    check_config(rg, c);
    FiringTable ft(rg);
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] >= ft.deg[i]) throw std::invalid_argument("is_recurrent: configuration is not stable");
    ChipConfig d = c;
    for (size_t i = 0; i < d.size(); ++i) d[i] += ft.root_edges[i];
    stabilize_in_place(ft, d);
    return d == c;
}

std::vector<ChipConfig> enumerate_recurrents(const RootedGraph& rg, long long max_configs) {
    FiringTable ft(rg);
    const int m = static_cast<int>(ft.deg.size());
    long long total = 1;
    for (int i = 0; i < m; ++i) {
        if (ft.deg[i] <= 0) throw std::invalid_argument("enumerate_recurrents: isolated non-root vertex");
        if (total > max_configs / ft.deg[i])
            throw std::invalid_argument("enumerate_recurrents: search space exceeds bound");
        total *= ft.deg[i];
    }

    std::vector<ChipConfig> out;
    ChipConfig c(m, 0);
    for (;;) {
        ChipConfig d = c;
        for (int i = 0; i < m; ++i) d[i] += ft.root_edges[i];
        stabilize_in_place(ft, d);
        if (d == c) out.push_back(c);
        // odometer, last index fastest
        int i = m - 1;
        while (i >= 0 && c[i] == ft.deg[i] - 1) {
            c[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++c[i];
    }
    return out;
}

UniPoly weight_enumerator(const RootedGraph& rg, long long max_configs) {
    std::vector<Int> coeffs;
    for (const ChipConfig& c : enumerate_recurrents(rg, max_configs)) {
        long long w = 0;
        for (long long x : c) w += x;
        if (w >= static_cast<long long>(coeffs.size())) coeffs.resize(w + 1, Int(0));
        coeffs[w] += 1;
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace sandpile
