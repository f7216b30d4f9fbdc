#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "upg/graph.hpp"
#include "upg/threedm.hpp"
#include "upg/types.hpp"

namespace upg {

// Default vertex cap for the subset-enumeration oracles. Callers that know
// what they are doing may raise it; the hard ceiling is 64 (bitmask width).
inline constexpr int kOracleSizeCap = 24;

// All oracles scan solution candidates in increasing cardinality and, within
// a cardinality, in lexicographic order, so the returned witness is the
// deterministic first optimum. Pruning only discards prefixes that provably
// admit no feasible completion, which keeps the output identical to the
// unpruned scan (tests cross-check this against naive enumeration).
//
// With a budget: search stops after cardinality `budget`; a failed search
// reports no with objective = budget + 1 (sizes <= budget were ruled out).

// Minimum S subseteq V \ X with G[S u X] connected.
Witness steiner_min(const Graph& g, const VertexSet& x, std::optional<int> budget = std::nullopt,
                    int size_cap = kOracleSizeCap);

// Minimum dominating set / minimum connected dominating set.
Witness ds_min(const Graph& g, std::optional<int> budget = std::nullopt,
               int size_cap = kOracleSizeCap);
Witness cds_min(const Graph& g, std::optional<int> budget = std::nullopt,
                int size_cap = kOracleSizeCap);

// Minimum clique S subseteq candidates with targets subseteq N[S].
Witness dominating_clique_min(const Graph& g, const VertexSet& candidates,
                              const VertexSet& targets,
                              std::optional<int> budget = std::nullopt,
                              int size_cap = kOracleSizeCap);

// n pairwise-disjoint triples, as indices into inst.triples.
Witness three_dm(const ThreeDMInstance& inst);

// Exact isomorphism test by degree-pruned backtracking.
bool isomorphic(const Graph& a, const Graph& b);

// Maximum matching on general graphs: augmenting-path search with blossom
// contraction (Edmonds), exact at any size we care about here.
std::vector<std::pair<Vertex, Vertex>> max_matching(const Graph& g);

// Minimum edge cover via matching (size n - max matching); nullopt when some
// vertex is isolated.
std::optional<std::vector<std::pair<Vertex, Vertex>>> min_edge_cover(const Graph& g);

}  // namespace upg
