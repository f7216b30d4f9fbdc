#pragma once

#include <string>
#include <utility>
#include <vector>

#include "upg/graph.hpp"
#include "upg/oracle.hpp"
#include "upg/threedm.hpp"
#include "upg/tree_model.hpp"
#include "upg/types.hpp"

namespace upg {

// A generated hardness instance: graph, certifying path tree model, terminal
// set (empty for the connected-domination variant), the decision budget, and
// one role tag per vertex.
struct GadgetOutput {
    Graph graph;
    TreeModel model;
    VertexSet terminals;
    int budget = 0;
    std::vector<std::string> labels;
};

// Subdivision of a graph together with a two-part edge partition whose parts
// are star forests (hence planar), certifying thickness at most 2.
struct ThicknessWitness {
    Graph sub;
    std::vector<std::pair<Vertex, Vertex>> part1, part2;
};

// 3D-Matching -> Connected Dominating Set on an undirected path graph of
// diameter <= 3. The output graph has 8m + 3n vertices and budget 2m + n;
// the instance has a matching iff the graph has a connected dominating set
// within budget.
GadgetOutput cds_from_3dm(const ThreeDMInstance& inst);

// Same graph and model; terminals are the simplicial vertices and the budget
// is unchanged, giving the Steiner companion instance.
GadgetOutput steiner_from_3dm(const ThreeDMInstance& inst);

// Dominating Set -> budget-k Steiner Tree on a bipartite graph with 2n + 1
// vertices; the budget is carried over unchanged.
GadgetOutput steiner_from_ds(const Graph& g, int k);

// Replace every edge uv by a length-2 path through a fresh vertex; split the
// new edges between the two parts by endpoint order.
ThicknessWitness subdivide(const Graph& g);

// (isomorphic(g1,g2), isomorphic(s(g1),s(g2))); the two answers agree.
std::pair<bool, bool> iso_transport(const Graph& g1, const Graph& g2, int size_cap = kOracleSizeCap);

}  // namespace upg
