#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "upg/graph.hpp"

namespace upg {

// Canonical form of a graph on at most 11 vertices: the maximum upper-triangle
// adjacency bitstring over all labelings consistent with an iterated
// degree-refinement partition. Equal codes <=> isomorphic.
uint64_t canonical_code(const Graph& g);

// AHU-style canonical string for a tree, rooted at its center(s).
std::string tree_code(const Graph& tree);

// All connected graphs with exactly n vertices, one per isomorphism class,
// sorted by canonical code. Desk scale (n <= 9 or so).
std::vector<Graph> connected_graphs(int n);

// All trees with exactly n nodes, one per isomorphism class, sorted by
// canonical tree code.
std::vector<Graph> trees_with(int n);

}  // namespace upg
