#include "sandpile/io.hpp"

#include <fstream>
#include <stdexcept>

namespace sandpile {

using nlohmann::json;

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

json multigraph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Multigraph multigraph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges")) throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    Multigraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON edge must be a pair");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

json tree_to_json(const Tree& t) {
    json edges = json::array();
    for (auto [u, v] : t.edges) edges.push_back({u, v});
    return {{"n", t.n}, {"edges", edges}};
}

Tree tree_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges")) throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON edge must be a pair");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Tree(j.at("n").get<int>(), std::move(edges));
}

json group_to_json(const AbelianGroup& g) {
    json factors = json::array();
    for (const Int& f : g.invariant_factors) factors.push_back(int_to_json(f));
    return {{"factors", factors}};
}

AbelianGroup group_from_json(const json& j) {
    std::vector<Int> factors;
    for (const auto& f : j.at("factors")) factors.push_back(int_from_json(f));
    return AbelianGroup::from_factors(std::move(factors));
}

json unipoly_to_json(const UniPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(int_to_json(c));
    return coeffs;
}

UniPoly unipoly_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j) coeffs.push_back(int_from_json(c));
    return UniPoly(std::move(coeffs));
}

namespace {

int parse_int(const std::string& s) {
    size_t used = 0;
    int v;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

}  // namespace

TreeFamily parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family must look like path:N, star:N, coconut:P,S or file:PATH");
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);

    TreeFamily f;
    if (kind == "path") {
        f.kind = TreeFamily::Kind::path;
        f.a = parse_int(rest);
        if (f.a < 1) throw std::invalid_argument("path:N needs N >= 1");
    } else if (kind == "star") {
        f.kind = TreeFamily::Kind::star;
        f.a = parse_int(rest);
        if (f.a < 2) throw std::invalid_argument("star:N needs N >= 2");
    } else if (kind == "coconut") {
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("coconut family needs coconut:P,S");
        f.kind = TreeFamily::Kind::coconut;
        f.a = parse_int(rest.substr(0, comma));
        f.b = parse_int(rest.substr(comma + 1));
        if (f.a < 1 || f.b < 1) throw std::invalid_argument("coconut:P,S needs P,S >= 1");
    } else if (kind == "file") {
        std::ifstream in(rest);
        if (!in) throw std::invalid_argument("cannot open '" + rest + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw std::invalid_argument("bad JSON in '" + rest + "': " + e.what());
        }
        f.kind = TreeFamily::Kind::explicit_tree;
        f.tree = tree_from_json(j);
    } else {
        throw std::invalid_argument("unknown family kind '" + kind + "'");
    }
    return f;
}

}  // namespace sandpile
