#pragma once

#include <string>

#include <json.hpp>

#include "sandpile/graphs.hpp"
#include "sandpile/linalg.hpp"
#include "sandpile/poly.hpp"

namespace sandpile {

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; parsing accepts both.
nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

// Graph format: {"n": <int>, "edges": [[u, v], ...]}, multiplicities by
// repetition.
nlohmann::json multigraph_to_json(const Multigraph& g);
Multigraph multigraph_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const Tree& t);
Tree tree_from_json(const nlohmann::json& j);

// {"factors": [2, 2, 24]}
nlohmann::json group_to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const nlohmann::json& j);

// coefficient list, constant term first
nlohmann::json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const nlohmann::json& j);

// "path:N", "star:N", "coconut:P,S" or "file:PATH" (a tree in graph JSON)
TreeFamily parse_family(const std::string& text);

}  // namespace sandpile
