#pragma once

#include <vector>

#include "sandpile/laplacian.hpp"
#include "sandpile/poly.hpp"

namespace sandpile {

// Chip counts over the non-root vertices, in ascending vertex order.
// All entries stay non-negative.
using ChipConfig = std::vector<long long>;

bool is_stable(const RootedGraph& rg, const ChipConfig& c);

// Fire the non-root vertex v: it loses deg(v) chips, each non-root
// neighbor gains the edge multiplicity, chips sent to the root vanish.
// Requires c[v] >= deg(v).
ChipConfig fire(const RootedGraph& rg, const ChipConfig& c, int v);

// Fire ready vertices, lowest index first, until stable. The result does
// not depend on the firing order.
ChipConfig stabilize(const RootedGraph& rg, ChipConfig c);

// A stable configuration is recurrent when firing the root and
// stabilizing leads back to it.
bool is_recurrent(const RootedGraph& rg, const ChipConfig& c);

// All recurrent configurations, in mixed-radix order over the stable box.
// Rejects graphs whose stable-configuration count exceeds max_configs.
std::vector<ChipConfig> enumerate_recurrents(const RootedGraph& rg, long long max_configs = 10000000);

// Sum of y^{chip count} over the recurrent configurations.
UniPoly weight_enumerator(const RootedGraph& rg, long long max_configs = 10000000);

}  // namespace sandpile
