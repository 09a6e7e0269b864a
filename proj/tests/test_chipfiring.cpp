#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sandpile/chipfiring.hpp"
#include "sandpile/tutte.hpp"

using namespace sandpile;

namespace {

RootedGraph k3_rooted() { return rooted_cone(path_tree(2)); }  // triangle, root = 2

// stabilize firing vertices in a random order; oracle for the abelian property
ChipConfig stabilize_random_order(const RootedGraph& rg, ChipConfig c, std::mt19937& rng) {
    auto degs = [&] {
        std::vector<long long> d;
        for (int v : rg.non_root_vertices()) d.push_back(rg.graph.degree(v));
        return d;
    }();
    auto verts = rg.non_root_vertices();
    for (;;) {
        std::vector<int> ready;
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] >= degs[i]) ready.push_back(static_cast<int>(i));
        if (ready.empty()) return c;
        int pick = ready[rng() % ready.size()];
        c = fire(rg, c, verts[pick]);
    }
}

// definitional recurrence oracle: breadth-first search over all firing
// sequences from the root-fired configuration, looking for c itself
bool recurrent_by_search(const RootedGraph& rg, const ChipConfig& c) {
    auto verts = rg.non_root_vertices();
    std::vector<long long> degs;
    for (int v : verts) degs.push_back(rg.graph.degree(v));

    ChipConfig start = c;
    for (size_t i = 0; i < start.size(); ++i) start[i] += rg.graph.multiplicity(rg.root, verts[i]);

    std::set<ChipConfig> seen;
    std::vector<ChipConfig> frontier = {start};
    seen.insert(start);
    while (!frontier.empty()) {
        ChipConfig cur = frontier.back();
        frontier.pop_back();
        if (cur == c) return true;
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] < degs[i]) continue;
            ChipConfig next = fire(rg, cur, verts[i]);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return false;
}

}  // namespace

TEST_CASE("fire") {
    RootedGraph rg = k3_rooted();
    CHECK(fire(rg, {2, 0}, 0) == ChipConfig{0, 1});
    CHECK_THROWS_AS(fire(rg, {1, 0}, 0), std::invalid_argument);  // below threshold
    CHECK_THROWS_AS(fire(rg, {2, 0}, 2), std::invalid_argument);  // root is not fireable
    CHECK_THROWS_AS(fire(rg, {2, 0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(fire(rg, {-1, 0}, 0), std::invalid_argument);

    // leaf of a star cone: degree 2, one chip goes to the center, one vanishes
    RootedGraph sc = rooted_cone(star_tree(4));
    ChipConfig after = fire(sc, {0, 2, 0, 0}, 1);
    CHECK(after == ChipConfig{1, 0, 0, 0});
}

TEST_CASE("stabilize") {
    RootedGraph rg = k3_rooted();
    CHECK(stabilize(rg, {1, 1}) == ChipConfig{1, 1});  // already stable
    CHECK(stabilize(rg, {3, 0}) == ChipConfig{1, 1});
    CHECK(is_stable(rg, {1, 1}));
    CHECK_FALSE(is_stable(rg, {2, 0}));
}

TEST_CASE("abelian property: stabilization is order independent") {
    std::mt19937 rng(2024);
    for (const Tree& t : enumerate_trees(5)) {
        RootedGraph rg = rooted_cone(t);
        std::uniform_int_distribution<long long> chips(0, 6);
        for (int trial = 0; trial < 20; ++trial) {
            ChipConfig c(t.n);
            for (auto& x : c) x = chips(rng);
            ChipConfig canonical = stabilize(rg, c);
            for (int rep = 0; rep < 5; ++rep) CHECK(stabilize_random_order(rg, c, rng) == canonical);
        }
    }
}

TEST_CASE("recurrence on the triangle") {
    RootedGraph rg = k3_rooted();
    CHECK(is_recurrent(rg, {1, 1}));
    CHECK(is_recurrent(rg, {1, 0}));
    CHECK(is_recurrent(rg, {0, 1}));
    CHECK_FALSE(is_recurrent(rg, {0, 0}));
    CHECK_THROWS_AS(is_recurrent(rg, {5, 0}), std::invalid_argument);  // unstable input
}

TEST_CASE("the all-maximal configuration is recurrent") {
    for (const Tree& t : enumerate_trees(6)) {
        RootedGraph rg = rooted_cone(t);
        ChipConfig top;
        for (int v : rg.non_root_vertices()) top.push_back(rg.graph.degree(v) - 1);
        CHECK(is_recurrent(rg, top));
    }
}

TEST_CASE("burning-style recurrence matches the search oracle") {
    std::vector<RootedGraph> graphs;
    graphs.push_back(k3_rooted());
    graphs.push_back(rooted_cone(path_tree(3)));
    graphs.push_back(rooted_cone(star_tree(4)));
    graphs.push_back(RootedGraph(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 0));  // 4-cycle
    graphs.push_back(RootedGraph(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}}), 2));
    for (const RootedGraph& rg : graphs) {
        std::vector<long long> degs;
        for (int v : rg.non_root_vertices()) degs.push_back(rg.graph.degree(v));
        ChipConfig c(degs.size(), 0);
        for (;;) {
            CHECK(is_recurrent(rg, c) == recurrent_by_search(rg, c));
            size_t i = 0;
            while (i < c.size() && c[i] == degs[i] - 1) c[i++] = 0;
            if (i == c.size()) break;
            ++c[i];
        }
    }
}

TEST_CASE("recurrent counts") {
    CHECK(enumerate_recurrents(k3_rooted()).size() == 3);
    CHECK(enumerate_recurrents(rooted_cone(path_tree(3))).size() == 8);   // F_6
    CHECK(enumerate_recurrents(rooted_cone(star_tree(4))).size() == 20);  // 2^2 * 5
    CHECK(enumerate_recurrents(rooted_cone(path_tree(7))).size() == 377); // F_14
    CHECK_THROWS_AS(enumerate_recurrents(rooted_cone(path_tree(7)), 100), std::invalid_argument);
}

TEST_CASE("recurrent count equals the spanning tree count") {
    std::mt19937 rng(6);
    for (const Tree& t : enumerate_trees(6)) {
        RootedGraph rg = rooted_cone(t);
        CHECK(Int(static_cast<long>(enumerate_recurrents(rg).size())) == spanning_tree_count(rg.graph));
    }
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        Multigraph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
        for (int i = 0; i < 2; ++i) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v) g.add_edge(u, v);
        }
        RootedGraph rg(g, static_cast<int>(rng() % n));
        CHECK(Int(static_cast<long>(enumerate_recurrents(rg).size())) == spanning_tree_count(g));
    }
}

TEST_CASE("weight enumerator and the Merino identity") {
    RootedGraph rg = k3_rooted();
    UniPoly w = weight_enumerator(rg);
    CHECK(w == UniPoly({Int(0), Int(2), Int(1)}));  // y^2 + 2y

    // y^{deg(root) - m} * weights == T(1, y), i.e. weights == y^{m - deg} T(1, y)
    UniPoly t1 = tutte_1y(rg.graph);
    CHECK(t1 == UniPoly({Int(2), Int(1)}));
    CHECK(w == t1.shifted(1));

    for (const Tree& t : enumerate_trees(5)) {
        RootedGraph rc = rooted_cone(t);
        int m = rc.graph.edge_count();
        int d = rc.graph.degree(rc.root);
        CHECK(weight_enumerator(rc) == tutte_1y(rc.graph).shifted(m - d));
    }
}
