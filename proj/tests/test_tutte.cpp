#include <doctest.h>

#include <random>

#include "sandpile/families.hpp"
#include "sandpile/laplacian.hpp"
#include "sandpile/tutte.hpp"

using namespace sandpile;

namespace {

// independent textbook deletion-contraction: always acts on the first edge
// of the sorted edge list, one copy at a time, no factorization, no memo
BiPoly tutte_textbook(const Multigraph& g) {
    if (g.edge_count() == 0) return BiPoly::one();
    auto e = g.edge_multiplicities().begin()->first;
    if (e.first == e.second) return tutte_textbook(delete_edge(g, e.first, e.second)) * BiPoly::y();
    Multigraph del = delete_edge(g, e.first, e.second);
    Multigraph con = contract_edge(g, e.first, e.second);
    if (!del.is_connected()) return tutte_textbook(con) * BiPoly::x();  // bridge
    return tutte_textbook(del) + tutte_textbook(con);
}

Multigraph random_connected_multigraph(std::mt19937& rng, int max_extra) {
    int n = 2 + static_cast<int>(rng() % 5);  // up to 6 vertices
    Multigraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v));
    int extra = static_cast<int>(rng() % (max_extra + 1));
    for (int i = 0; i < extra && g.edge_count() < 10; ++i)
        g.add_edge(static_cast<int>(rng() % n), static_cast<int>(rng() % n));  // loops allowed
    return g;
}

}  // namespace

TEST_CASE("tutte base cases") {
    CHECK(tutte(Multigraph(2, {{0, 1}})) == BiPoly::x());
    CHECK(tutte(Multigraph(1, {{0, 0}})) == BiPoly::y());
    CHECK(tutte(Multigraph(1)) == BiPoly::one());

    BiPoly k3 = tutte(cone(path_tree(2)));
    BiPoly want = BiPoly::x() * BiPoly::x() + BiPoly::x() + BiPoly::y();
    CHECK(k3 == want);

    CHECK(tutte(Multigraph(2, {{0, 1}, {0, 1}})) == BiPoly::x() + BiPoly::y());
    CHECK_THROWS_AS(tutte(Multigraph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("tutte at x=1 for small cones") {
    // T(1,y) of the cone over P_7, frozen from the closed-form recursion
    UniPoly f14({Int(64), Int(112), Int(104), Int(63), Int(26), Int(7), Int(1)});
    CHECK(fib_poly(14) == f14);
    CHECK(tutte_1y(cone(path_tree(7))) == f14);

    // cone over S_7
    UniPoly s7({Int(64), Int(63), Int(57), Int(42), Int(22), Int(7), Int(1)});
    CHECK(star_poly(7) == s7);
    CHECK(tutte_1y(cone(star_tree(7))) == s7);

    for (const Tree& t : enumerate_trees(6)) {
        Multigraph g = cone(t);
        CHECK(tutte_1y(g).eval(1) == spanning_tree_count(g));
    }
}

TEST_CASE("bivariate specialization agrees with the direct x=1 recursion") {
    std::mt19937 rng(777);
    for (const Tree& t : enumerate_trees(6)) {
        Multigraph g = cone(t);
        CHECK(tutte_1y(g) == tutte_1y_direct(g));
    }
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph g = random_connected_multigraph(rng, 4);
        CHECK(tutte_1y(g) == tutte_1y_direct(g));
    }
}

TEST_CASE("engine agrees with the textbook recursion") {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 30; ++trial) {
        Multigraph g = random_connected_multigraph(rng, 4);
        CHECK(tutte(g) == tutte_textbook(g));
    }

    // heavier parallel classes and loops
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        Multigraph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng() % v), 1 + static_cast<int>(rng() % 3));
        for (int i = 0; i < 2; ++i) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (g.edge_count() < 11) g.add_edge(u, v, 1 + static_cast<int>(rng() % 2));
        }
        CHECK(tutte(g) == tutte_textbook(g));
    }

    // pure trees (all bridges) and the cone over a path
    CHECK(tutte(to_multigraph(coconut_tree(3, 3))) == BiPoly::one().times_x(5));
    CHECK(tutte(cone(path_tree(4))) == tutte_textbook(cone(path_tree(4))));
}

TEST_CASE("all Tutte coefficients are nonnegative and T(1,1) = tau") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        Multigraph g = random_connected_multigraph(rng, 4);
        BiPoly t = tutte(g);
        for (const auto& [key, c] : t.terms()) CHECK(c > 0);
        if (!g.has_loop()) CHECK(t.eval(1, 1) == spanning_tree_count(g));
    }
}

TEST_CASE("activity generating function") {
    Multigraph k3 = cone(path_tree(2));
    BiPoly want = tutte(k3);
    CHECK(tutte_by_activities(k3, {{0, 1}, {0, 2}, {1, 2}}) == want);
    CHECK(tutte_by_activities(k3, {{1, 2}, {0, 2}, {0, 1}}) == want);

    // triangle with a doubled edge
    Multigraph doubled(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}});
    CHECK(tutte_by_activities(doubled, doubled.edge_list()) == tutte(doubled));

    CHECK_THROWS_AS(tutte_by_activities(k3, {{0, 1}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(tutte_by_activities(k3, {{0, 1}, {0, 2}, {1, 2}}, 2), std::invalid_argument);

    std::mt19937 rng(141);
    for (int trial = 0; trial < 15; ++trial) {
        Multigraph g = random_connected_multigraph(rng, 4);
        BiPoly reference = tutte(g);
        auto order = g.edge_list();
        for (int rep = 0; rep < 3; ++rep) {
            std::shuffle(order.begin(), order.end(), rng);
            CHECK(tutte_by_activities(g, order) == reference);
        }
    }
}

TEST_CASE("cut vertex factorization") {
    // two triangles sharing a vertex
    Multigraph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto blocks = cut_vertex_factor(bowtie);
    CHECK(blocks.size() == 2);
    BiPoly k3 = tutte(cone(path_tree(2)));
    CHECK(tutte(bowtie) == k3 * k3);

    // a bridge is its own block
    Multigraph bridged(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    auto blocks2 = cut_vertex_factor(bridged);
    CHECK(blocks2.size() == 2);
    bool saw_single_edge = false;
    for (const auto& b : blocks2) saw_single_edge |= (b.vertex_count() == 2 && b.edge_count() == 1);
    CHECK(saw_single_edge);

    // loops split off as singleton blocks
    Multigraph loopy(2, {{0, 1}, {1, 1}});
    auto blocks3 = cut_vertex_factor(loopy);
    CHECK(blocks3.size() == 2);
    CHECK(tutte(loopy) == BiPoly::x() * BiPoly::y());

    // deleting the cone edge at a leaf makes the pendant tree edge a block
    // of its own (a coloop contributing x)
    Tree t = coconut_tree(3, 2);
    for (int leaf : leaves(t)) {
        Multigraph g = delete_edge(cone(t), leaf, t.n);
        auto bs = cut_vertex_factor(g);
        CHECK(bs.size() == 2);
        bool pendant = false;
        for (const auto& b : bs) pendant |= (b.vertex_count() == 2 && b.edge_count() == 1);
        CHECK(pendant);
        Tree rest = delete_leaf(t, leaf);
        CHECK(tutte(g) == tutte(cone(rest)).times_x());
    }

    // product over blocks reproduces the whole polynomial
    std::mt19937 rng(555);
    for (int trial = 0; trial < 15; ++trial) {
        Multigraph g = random_connected_multigraph(rng, 4);
        BiPoly prod = BiPoly::one();
        for (const auto& b : cut_vertex_factor(g)) prod = prod * tutte(b);
        CHECK(prod == tutte(g));
    }
}

TEST_CASE("leaf deletion-contraction identities for cones") {
    for (int n = 3; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (int leaf : leaves(t)) {
                int nb = -1;
                for (auto [u, v] : t.edges) {
                    if (u == leaf) nb = v;
                    if (v == leaf) nb = u;
                }
                Tree smaller = delete_leaf(t, leaf);
                int nbr = nb > leaf ? nb - 1 : nb;

                BiPoly whole = tutte(cone(t));
                BiPoly plain = tutte(cone(smaller));
                BiPoly doubled = tutte(cone_plus(smaller, nbr));
                CHECK(whole == plain.times_x() + doubled);  // split at the cone edge of the leaf

                BiPoly whole_doubled = tutte(cone_plus(t, leaf));
                CHECK(whole_doubled == whole + doubled.times_y());
            }
}

TEST_CASE("closed forms for path cones and their doubled versions") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(tutte_1y(cone(path_tree(n))) == fib_poly(2 * n));
        int end = n - 1;
        CHECK(tutte_1y(cone_plus(path_tree(n), end)) == fib_poly(2 * n + 1));
    }
}
