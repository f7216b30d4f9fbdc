#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "upg/graph.hpp"
#include "upg/tree_model.hpp"
#include "upg/types.hpp"

namespace upg {

// A Steiner query on an undirected path graph: connected graph, certifying
// path model, nonempty terminal set, and a budget that only influences the
// yes/no field of the answer (the solver always computes the exact minimum).
struct SteinerInstance {
    Graph graph;
    TreeModel model;
    VertexSet terminals;
    int budget = std::numeric_limits<int>::max();
};

// Throws instance_error when the instance invariants fail.
void check_instance(const SteinerInstance& inst);

struct Removal {
    enum class Kind { Twin, Simplicial, Leafy };
    Kind kind = Kind::Twin;
    Vertex removed = -1;  // id in the op's input instance
    // kept twin for Twin; the non-leafy terminal whose path reached the host
    // leaf for Leafy; -1 for Simplicial
    Vertex partner = -1;
};

struct ReductionResult {
    SteinerInstance instance;
    std::vector<Removal> removals;
    std::vector<Vertex> to_original;  // instance vertex -> input-instance vertex
};

// Deletes one member of a twin pair (preferring non-terminal twins) until the
// graph is twin-free; inert when |X| < 3, which the caller routes to base
// cases. The Steiner value is preserved.
ReductionResult reduce_twins(const SteinerInstance& inst);

// Deletes every simplicial vertex outside the terminal set, cascading until
// none remains. Value preserved.
ReductionResult reduce_simplicial(const SteinerInstance& inst);

// For every non-leafy terminal whose path reaches a host leaf, deletes the
// unique leafy terminal at that leaf and prunes the leaf, re-minimalizing the
// model. Pre: minimal model, twin-free graph, every leafy vertex a terminal;
// violations raise contract_error. Stops early (partial progress) if a
// deletion re-introduces twins.
ReductionResult reduce_leafy(const SteinerInstance& inst);

// Core step on a fully reduced instance: the minimum clique S inside V \ X
// dominating the leafy set, found per host node as a minimum edge cover of
// the host leaves by candidate paths (each path covers at most two leaves).
// Ties: smallest set lexicographically, then smallest host node.
// Pre (contract_error): reduced instance with diameter <= 2, |X| >= 3,
// disconnected G[X].
std::pair<Witness, int> min_clique_dominating_leafy(const SteinerInstance& inst);

struct SolveTrace {
    std::vector<Removal> removed_twins;        // original ids
    std::vector<Removal> removed_simplicials;  // original ids
    std::vector<Removal> removed_leafy;        // original ids
    int chosen_node = -1;                      // host node of the reduced model; -1 for base cases
    std::string base_case;                     // empty when the clique core decided
    Witness witness;
    VertexSet optimal_set;                     // exact optimum in original ids, budget ignored
    SteinerInstance reduced;                   // state handed to the base case / core
    std::vector<Vertex> reduced_to_original;
};

// Full pipeline: base cases, reductions to a joint fixpoint, clique core,
// witness lifted back to original ids and re-verified there. Demands
// diameter(graph) <= 2 (class_error otherwise).
std::pair<Witness, SolveTrace> solve(const SteinerInstance& inst);

// Exchange predicate used to argue that some optimum is a clique: y,z must be
// adjacent and jointly cover the open neighborhoods of u and v.
bool replacement_applicable(const Graph& g, Vertex u, Vertex v, Vertex y, Vertex z);
VertexSet replacement_apply(const VertexSet& s, const VertexSet& x, Vertex u, Vertex v, Vertex y,
                            Vertex z);

}  // namespace upg
