#pragma once

#include <optional>

#include "upg/graph.hpp"
#include "upg/rng.hpp"
#include "upg/threedm.hpp"
#include "upg/tree_model.hpp"
#include "upg/types.hpp"

namespace upg {

// Seeded instance generators for sweeps and fuzzing. Draw order is part of
// the reproducibility contract: each function documents exactly how it
// consumes the generator.

// Each of the C(n,2) vertex pairs becomes an edge with probability
// permille/1000, scanned in lexicographic order.
Graph random_graph(int n, int edge_permille, SplitMix64& rng);

// random_graph conditioned on connectivity by retry (at most `attempts`);
// falls back to threading a path through vertex order if all retries fail.
Graph random_connected_graph(int n, int edge_permille, SplitMix64& rng, int attempts = 64);

// m distinct triples drawn uniformly from [0,n)^3 by rejection, then
// canonicalized. Requires m <= n^3.
ThreeDMInstance random_3dm(int n, int m, SplitMix64& rng);

// Random labeled host tree on `nodes` nodes: node i >= 1 attaches to a
// uniform node below it.
Graph random_tree(int nodes, SplitMix64& rng);

// Random path model: host tree plus one host path (uniform node pair) per
// vertex. The realized graph is an undirected path graph by construction.
TreeModel random_path_model(int vertices, int host_nodes, SplitMix64& rng);

// Random interval-style model: the host tree is a path, so a later universal
// vertex can always be added as a full-host path.
TreeModel random_interval_model(int vertices, int host_nodes, SplitMix64& rng);

// Random connected undirected path graph with model, by rejection over
// random_path_model. Returns nullopt when no attempt lands connected.
std::optional<TreeModel> random_connected_path_model(int vertices, int host_nodes,
                                                     SplitMix64& rng, int attempts = 64);

// Like random_path_model but every vertex gets a distinct host path (a
// shuffled prefix of all paths), which rules out closed twins. Returns
// nullopt when the host has fewer paths than vertices or no attempt lands
// connected.
std::optional<TreeModel> random_distinct_path_model(int vertices, int host_nodes,
                                                    SplitMix64& rng, int attempts = 64);

// Random terminal set of the given size (uniform without replacement).
VertexSet random_vertex_subset(int n, int size, SplitMix64& rng);

}  // namespace upg
