#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "upg/types.hpp"

namespace upg {

// Finite simple undirected graph on dense vertex ids 0..n-1. Immutable once
// built; external labels live in the I/O layer.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

    void add_edge(Vertex u, Vertex v);  // rejects loops, duplicates, out-of-range

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    const std::vector<Vertex>& neighbors_of(Vertex v) const;  // sorted

    // Lexicographically sorted (u < v) edge list.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph& other) const;

    void check_vertex(Vertex v) const;  // throws std::out_of_range

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<Vertex>> nbr_;
};

struct TwinPair {
    Vertex u = 0;
    Vertex v = 0;
    bool adjacent = false;  // true: N[u] == N[v], false: N(u) == N(v)
    bool operator==(const TwinPair&) const = default;
};

// Open or closed neighborhood as a VertexSet.
VertexSet neighbors(const Graph& g, Vertex v, bool closed);

// True iff every vertex of g lies in d or has a neighbor in d.
bool is_dominating(const Graph& g, const VertexSet& d);

// True iff the subgraph induced by s is connected. The empty set and
// singletons count as connected.
bool is_connected_induced(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex src);

// Max shortest-path length over all pairs; nullopt for disconnected graphs,
// 0 for graphs with at most one vertex.
std::optional<int> diameter(const Graph& g);

// All unordered twin pairs (equal open or equal closed neighborhoods),
// lexicographically ordered.
std::vector<TwinPair> twins(const Graph& g);

// Vertices whose open neighborhood induces a clique; isolated vertices count.
VertexSet simplicial_vertices(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_tree(const Graph& g);

// Two-coloring; nullopt when g has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

// Subgraph induced by keep, plus the map from new ids to old ids.
std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const VertexSet& keep);

// Whole graph minus one vertex, with the same id map convention.
std::pair<Graph, std::vector<Vertex>> remove_vertex(const Graph& g, Vertex v);

// Perfect-elimination-ordering test via maximum cardinality search.
bool is_chordal(const Graph& g);

// Bron-Kerbosch; maximal cliques sorted lexicographically. Desk scale only.
std::vector<VertexSet> maximal_cliques(const Graph& g);

}  // namespace upg
