#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "upg/graph.hpp"
#include "upg/report.hpp"
#include "upg/types.hpp"

namespace upg {

// Host tree plus one host-node set per graph vertex. A valid model realizes
// the graph by the intersection law: uv is an edge iff the node sets of u
// and v intersect. With `require_paths` every node set must induce a path
// of the host, which certifies membership in the undirected-path class.
struct TreeModel {
    Graph host;
    std::vector<VertexSet> assignment;  // indexed by graph vertex

    int node_count() const { return host.vertex_count(); }
    int vertex_count() const { return static_cast<int>(assignment.size()); }
};

struct LeafyReport {
    VertexSet leafy;                                 // vertices u with T_u a single host leaf
    std::vector<std::pair<Vertex, int>> leaf_of;     // (vertex, host leaf), sorted by vertex
};

// The intersection graph the model realizes, regardless of any target graph.
Graph realize(const TreeModel& m);

// Node set V_t: vertices whose assignment contains host node t.
VertexSet node_set(const TreeModel& m, int t);

// Per-invariant validation against a target graph: host is a tree, every
// assignment is a nonempty subtree (path when required), and the realized
// edge set equals g exactly. Vertex-count mismatch is an instance error.
VerificationReport validate(const TreeModel& m, const Graph& g, bool require_paths);

bool node_set_is_subtree(const TreeModel& m, Vertex v);
bool node_set_is_path(const TreeModel& m, Vertex v);

// Contracts host edges tt' with V_t contained in V_t' (lowest edge first)
// until none remains. The result models the same graph; paths stay paths.
TreeModel make_minimal(const TreeModel& m);

bool is_minimal(const TreeModel& m);

std::vector<int> host_leaves(const TreeModel& m);  // degree-1 host nodes; none for a 1-node host

LeafyReport leafy_vertices(const TreeModel& m);

// Exhaustive search for a (path) tree model of g with at most node_budget
// host nodes; node_budget <= 0 means "number of maximal cliques", which
// suffices for chordal and undirected-path targets. Deterministic given g.
// Refuses graphs larger than size_cap.
std::optional<TreeModel> search_model(const Graph& g, bool require_paths, int node_budget = 0,
                                      int size_cap = 10);

}  // namespace upg
