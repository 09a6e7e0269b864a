#include <doctest.h>

#include "sandpile/census.hpp"
#include "sandpile/io.hpp"

using namespace sandpile;

TEST_CASE("census at n=4") {
    auto records = build_census(4);
    REQUIRE(records.size() == 2);
    // canonical order puts one of P_4 / S_4 first; identify by group
    const TreeRecord* path = nullptr;
    const TreeRecord* star = nullptr;
    for (const auto& r : records) {
        if (r.code == canonical_code(path_tree(4))) path = &r;
        if (r.code == canonical_code(star_tree(4))) star = &r;
    }
    REQUIRE(path != nullptr);
    REQUIRE(star != nullptr);
    CHECK(path->group.to_string() == "Z_21");  // F_8
    CHECK(star->group.to_string() == "Z_2 x Z_10");
    CHECK(path->tau == 21);
    CHECK(star->tau == 20);
    CHECK(path->leaf_count == 2);
    CHECK(star->leaf_count == 3);
}

TEST_CASE("census invariants and threading") {
    auto serial = build_census(6, 1);
    auto parallel = build_census(6, 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].code == parallel[i].code);
        CHECK(serial[i].group == parallel[i].group);
        CHECK(serial[i].t1y == parallel[i].t1y);
        CHECK(serial[i].group.order() == serial[i].tau);
        CHECK(serial[i].t1y.eval(1) == serial[i].tau);
    }
    CHECK_THROWS_AS(build_census(1), std::invalid_argument);
    CHECK_THROWS_AS(build_census(11), std::invalid_argument);
}

TEST_CASE("reference table at n=7") {
    Report r = verify_table7(2);
    for (const auto& item : r.items) {
        INFO(item.name, ": ", item.detail);
        CHECK(item.pass);
    }
    CHECK(r.all_pass());
    REQUIRE(!r.notes.empty());
}

TEST_CASE("poset structure") {
    TreePoset poset = build_poset(7, 2);
    CHECK(poset.nodes.size() == 11);
    CHECK(!poset.covers.empty());

    // every cover raises the leaf count by exactly one
    for (auto [i, j] : poset.covers)
        CHECK(poset.nodes[j].leaf_count == poset.nodes[i].leaf_count + 1);

    // CT(p,s) < CT(p-1,s+1) for p >= 3, p+s = 7
    auto index_of_code = [&](const std::string& code) {
        for (size_t i = 0; i < poset.nodes.size(); ++i)
            if (poset.nodes[i].code == code) return static_cast<int>(i);
        return -1;
    };
    for (int p = 3; p <= 5; ++p) {
        int lo = index_of_code(canonical_code(coconut_tree(p, 7 - p)));
        int hi = index_of_code(canonical_code(coconut_tree(p - 1, 8 - p)));
        REQUIRE(lo >= 0);
        REQUIRE(hi >= 0);
        bool found = false;
        for (auto [i, j] : poset.covers) found |= (i == lo && j == hi);
        CHECK(found);
    }
}

TEST_CASE("cover monotonicity and the mu non-monotonicity witness") {
    Report r = verify_cover_monotonicity(7, 2);
    CHECK(r.all_pass());

    // the reference rows with groups Z_5 x Z_70 and Z_320 form a cover on
    // which mu drops from 2 to 1
    TreePoset poset = build_poset(7, 2);
    int lo = -1, hi = -1;
    for (size_t i = 0; i < poset.nodes.size(); ++i) {
        if (poset.nodes[i].group.to_string() == "Z_5 x Z_70") lo = static_cast<int>(i);
        if (poset.nodes[i].group.to_string() == "Z_320") hi = static_cast<int>(i);
    }
    REQUIRE(lo >= 0);
    REQUIRE(hi >= 0);
    CHECK(poset.nodes[lo].mu_value == 2);
    CHECK(poset.nodes[hi].mu_value == 1);
    bool cover_found = false;
    for (auto [i, j] : poset.covers) cover_found |= (i == lo && j == hi);
    CHECK(cover_found);
}

TEST_CASE("theorem suites pass on small censuses") {
    for (int n : {2, 3, 5}) {
        Report r1 = verify_theorem1(n);
        CHECK(r1.all_pass());
    }
    for (int n : {3, 6}) {
        Report rb = verify_theorem_bounds(n, 2);
        for (const auto& item : rb.items) {
            INFO(item.name, ": ", item.detail);
            CHECK(item.pass);
        }
    }
    CHECK(verify_leaf_deletion_bound(2).all_pass());
    CHECK(verify_leaf_deletion_bound(6, 2).all_pass());
    CHECK(verify_contraction_bound(5, 2).all_pass());
    CHECK(verify_merino(5).all_pass());
    CHECK(verify_consistency(6, 2).all_pass());
}

TEST_CASE("verify_all composes the suites") {
    auto reports = verify_all(5, 2);
    CHECK(reports.size() >= 6);
    for (const Report& r : reports) CHECK(r.all_pass());

    // report JSON carries per-item results
    nlohmann::json j = report_to_json(reports.front());
    CHECK(j.at("suite") == "consistency");
    CHECK(j.at("pass") == true);
    CHECK(j.at("items").is_array());
}

TEST_CASE("table emission round trip") {
    auto records = build_census(5, 2);
    nlohmann::json j = table_json(5, records);
    REQUIRE(j.at("trees").size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& row = j.at("trees").at(i);
        CHECK(row.at("canonical_code") == records[i].code);
        CHECK(group_from_json(row.at("group")) == records[i].group);
        CHECK(int_from_json(row.at("tau")) == records[i].tau);
        CHECK(row.at("mu").get<int>() == records[i].mu_value);
        CHECK(unipoly_from_json(row.at("t1y")) == records[i].t1y);
    }

    std::string csv = table_csv(records);
    CHECK(csv.find("index,canonical_code,group,tau,mu,t1y_coefficients") == 0);
    std::string md = table_markdown(records);
    CHECK(md.find("| # |") == 0);

    TreePoset poset = build_poset(5, 2);
    std::string dot = poset_dot(poset);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("->") != std::string::npos);
}
