#include "upg/diam2.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "upg/oracle.hpp"

namespace upg {

void check_instance(const SteinerInstance& inst) {
    if (inst.terminals.empty()) throw instance_error("steiner instance: empty terminal set");
    for (Vertex v : inst.terminals) inst.graph.check_vertex(v);
    if (!is_connected(inst.graph)) throw instance_error("steiner instance: disconnected graph");
    VerificationReport check = validate(inst.model, inst.graph, true);
    if (!check.pass()) {
        const Check* bad = check.first_failure();
        throw instance_error("steiner instance: invalid model (" + bad->name + ")");
    }
}

namespace {

// Remove one graph vertex: induced subgraph, terminal reindexing, assignment
// dropped. Host nodes are untouched.
SteinerInstance delete_vertex(const SteinerInstance& inst, Vertex gone,
                              std::vector<Vertex>& to_parent) {
    SteinerInstance out;
    auto [g, old_ids] = remove_vertex(inst.graph, gone);
    out.graph = std::move(g);
    to_parent = old_ids;
    out.model.host = inst.model.host;
    out.model.assignment.reserve(old_ids.size());
    std::vector<Vertex> terminals;
    for (size_t i = 0; i < old_ids.size(); ++i) {
        out.model.assignment.push_back(inst.model.assignment[static_cast<size_t>(old_ids[i])]);
        if (inst.terminals.contains(old_ids[i])) terminals.push_back(static_cast<Vertex>(i));
    }
    out.terminals = VertexSet(std::move(terminals));
    out.budget = inst.budget;
    return out;
}

std::vector<Vertex> compose(const std::vector<Vertex>& outer, const std::vector<Vertex>& inner) {
    std::vector<Vertex> out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[static_cast<size_t>(inner[i])];
    return out;
}

std::vector<Vertex> identity_map(int n) {
    std::vector<Vertex> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = i;
    return out;
}

}  // namespace

ReductionResult reduce_twins(const SteinerInstance& inst) {
    ReductionResult result{inst, {}, identity_map(inst.graph.vertex_count())};
    while (result.instance.terminals.size() >= 3) {
        std::vector<TwinPair> pairs = twins(result.instance.graph);
        if (pairs.empty()) break;
        // prefer deleting a non-terminal twin; the kept vertex then covers
        // every role the deleted one had
        const VertexSet& x = result.instance.terminals;
        Vertex removed = -1, kept = -1;
        for (const TwinPair& tp : pairs) {
            if (!x.contains(tp.u)) {
                removed = tp.u;
                kept = tp.v;
                break;
            }
            if (!x.contains(tp.v)) {
                removed = tp.v;
                kept = tp.u;
                break;
            }
        }
        if (removed < 0) {
            removed = pairs.front().u;  // both terminals; either works
            kept = pairs.front().v;
        }
        result.removals.push_back(
            {Removal::Kind::Twin, result.to_original[static_cast<size_t>(removed)],
             result.to_original[static_cast<size_t>(kept)]});
        std::vector<Vertex> to_parent;
        result.instance = delete_vertex(result.instance, removed, to_parent);
        result.to_original = compose(result.to_original, to_parent);
    }
    return result;
}

ReductionResult reduce_simplicial(const SteinerInstance& inst) {
    ReductionResult result{inst, {}, identity_map(inst.graph.vertex_count())};
    while (true) {
        VertexSet removable =
            set_difference(simplicial_vertices(result.instance.graph), result.instance.terminals);
        if (removable.empty()) break;
        Vertex gone = removable.ids().front();
        result.removals.push_back(
            {Removal::Kind::Simplicial, result.to_original[static_cast<size_t>(gone)], -1});
        std::vector<Vertex> to_parent;
        result.instance = delete_vertex(result.instance, gone, to_parent);
        result.to_original = compose(result.to_original, to_parent);
    }
    return result;
}

namespace {

// Drop host leaf `leaf` after its leafy vertex was deleted: every surviving
// path that reached the leaf also contains its neighbor, so truncation keeps
// paths nonempty and connected.
TreeModel prune_host_leaf(const TreeModel& m, int leaf) {
    TreeModel out;
    const int nodes = m.node_count();
    std::vector<int> fresh(static_cast<size_t>(nodes));
    for (int i = 0; i < nodes; ++i) fresh[static_cast<size_t>(i)] = i < leaf ? i : i - 1;
    out.host = Graph(nodes - 1);
    for (const auto& [a, b] : m.host.edges()) {
        if (a == leaf || b == leaf) continue;
        out.host.add_edge(fresh[static_cast<size_t>(a)], fresh[static_cast<size_t>(b)]);
    }
    out.assignment.reserve(m.assignment.size());
    for (const VertexSet& nodes_of_v : m.assignment) {
        std::vector<int> mapped;
        for (int t : nodes_of_v)
            if (t != leaf) mapped.push_back(fresh[static_cast<size_t>(t)]);
        if (mapped.empty())
            throw contract_error("reduce_leafy: a surviving vertex lived only on the pruned leaf");
        out.assignment.emplace_back(std::move(mapped));
    }
    return out;
}

}  // namespace

ReductionResult reduce_leafy(const SteinerInstance& inst) {
    if (!is_minimal(inst.model)) throw contract_error("reduce_leafy: model is not minimal");
    {
        LeafyReport lr = leafy_vertices(inst.model);
        if (!set_difference(lr.leafy, inst.terminals).empty())
            throw contract_error("reduce_leafy: leafy vertex outside the terminal set");
    }
    ReductionResult result{inst, {}, identity_map(inst.graph.vertex_count())};
    while (true) {
        const SteinerInstance& cur = result.instance;
        LeafyReport lr = leafy_vertices(cur.model);
        if (!set_difference(lr.leafy, cur.terminals).empty()) break;

        // find a non-leafy terminal whose path reaches a host leaf
        std::vector<int> leaves = host_leaves(cur.model);
        std::vector<bool> is_leaf(static_cast<size_t>(cur.model.node_count()), false);
        for (int t : leaves) is_leaf[static_cast<size_t>(t)] = true;

        Vertex forcing = -1;
        int leaf = -1;
        for (Vertex x : cur.terminals) {
            if (lr.leafy.contains(x)) continue;
            for (int t : cur.model.assignment[static_cast<size_t>(x)]) {
                if (is_leaf[static_cast<size_t>(t)]) {
                    forcing = x;
                    leaf = t;
                    break;
                }
            }
            if (forcing >= 0) break;
        }
        if (forcing < 0) break;

        VertexSet leafy_here = set_intersection(node_set(cur.model, leaf), lr.leafy);
        // twins sharing the leaf: hand back to the twin pass
        if (leafy_here.size() != 1) break;
        Vertex gone = leafy_here.ids().front();

        result.removals.push_back(
            {Removal::Kind::Leafy, result.to_original[static_cast<size_t>(gone)],
             result.to_original[static_cast<size_t>(forcing)]});

        std::vector<Vertex> to_parent;
        SteinerInstance next = delete_vertex(result.instance, gone, to_parent);
        next.model = prune_host_leaf(next.model, leaf);
        next.model = make_minimal(next.model);
        result.instance = std::move(next);
        result.to_original = compose(result.to_original, to_parent);
    }
    return result;
}

namespace {

struct NodeOptimum {
    int size = 0;
    VertexSet set;
};

// Minimum cover of `remaining` host leaves by the candidate suffix starting
// at `from`; each candidate covers at most two leaves, so this is an edge
// cover computed through maximum matching.
std::optional<int> cover_size(const std::vector<std::vector<int>>& covers,
                              const std::vector<bool>& remaining, int leaf_count, size_t from) {
    int remaining_count = 0;
    for (bool b : remaining)
        if (b) ++remaining_count;
    if (remaining_count == 0) return 0;

    std::vector<bool> touched(static_cast<size_t>(leaf_count), false);
    Graph pair_graph(leaf_count);
    for (size_t i = from; i < covers.size(); ++i) {
        std::vector<int> live;
        for (int leaf : covers[i])
            if (remaining[static_cast<size_t>(leaf)]) live.push_back(leaf);
        for (int leaf : live) touched[static_cast<size_t>(leaf)] = true;
        if (live.size() == 2 && !pair_graph.has_edge(live[0], live[1]))
            pair_graph.add_edge(live[0], live[1]);
    }
    for (int leaf = 0; leaf < leaf_count; ++leaf)
        if (remaining[static_cast<size_t>(leaf)] && !touched[static_cast<size_t>(leaf)])
            return std::nullopt;
    int matched = static_cast<int>(max_matching(pair_graph).size());
    return remaining_count - matched;
}

}  // namespace

std::pair<Witness, int> min_clique_dominating_leafy(const SteinerInstance& inst) {
    const Graph& g = inst.graph;
    const TreeModel& m = inst.model;
    const VertexSet& x = inst.terminals;

    if (!is_minimal(m)) throw contract_error("clique core: model is not minimal");
    LeafyReport lr = leafy_vertices(m);
    if (!set_difference(lr.leafy, x).empty())
        throw contract_error("clique core: leafy vertex outside the terminal set");
    {
        std::vector<int> leaves = host_leaves(m);
        std::vector<bool> is_leaf(static_cast<size_t>(m.node_count()), false);
        for (int t : leaves) is_leaf[static_cast<size_t>(t)] = true;
        for (Vertex v : x) {
            if (lr.leafy.contains(v)) continue;
            for (int t : m.assignment[static_cast<size_t>(v)])
                if (is_leaf[static_cast<size_t>(t)])
                    throw contract_error("clique core: unpruned terminal on a host leaf");
        }
    }
    {
        std::optional<int> d = diameter(g);
        if (!d || *d > 2) throw contract_error("clique core: diameter exceeds 2");
    }
    if (x.size() < 3) throw contract_error("clique core: fewer than three terminals");
    if (is_connected_induced(g, x)) throw contract_error("clique core: terminals already connected");

    std::vector<int> leaves = host_leaves(m);
    const int leaf_count = static_cast<int>(leaves.size());
    std::vector<int> leaf_index(static_cast<size_t>(m.node_count()), -1);
    for (int i = 0; i < leaf_count; ++i) leaf_index[static_cast<size_t>(leaves[static_cast<size_t>(i)])] = i;
    for (int t : leaves) {
        VertexSet leafy_here = set_intersection(node_set(m, t), lr.leafy);
        if (leafy_here.size() != 1)
            throw contract_error("clique core: host leaf without a unique leafy vertex");
    }

    std::optional<NodeOptimum> best;
    int best_node = -1;
    for (int t = 0; t < m.node_count(); ++t) {
        std::vector<Vertex> cands_vec;
        for (Vertex v : node_set(m, t))
            if (!x.contains(v)) cands_vec.push_back(v);
        if (cands_vec.empty()) continue;

        std::vector<std::vector<int>> covers(cands_vec.size());
        for (size_t i = 0; i < cands_vec.size(); ++i) {
            for (int node : m.assignment[static_cast<size_t>(cands_vec[i])]) {
                int li = leaf_index[static_cast<size_t>(node)];
                if (li >= 0) covers[i].push_back(li);
            }
            if (covers[i].size() > 2)
                throw integrity_error("clique core: a host path visits three leaves");
        }

        std::vector<bool> remaining(static_cast<size_t>(leaf_count), true);
        std::optional<int> opt = cover_size(covers, remaining, leaf_count, 0);
        if (!opt) continue;  // some leaf unreachable from this node's candidates
        int target = *opt;

        // lexicographically smallest optimal cover: take a candidate exactly
        // when the suffix can still finish within the remaining budget
        VertexSet chosen;
        int left = target;
        for (size_t i = 0; i < cands_vec.size() && left > 0; ++i) {
            std::vector<bool> after = remaining;
            bool covers_something = false;
            for (int leaf : covers[i]) {
                if (after[static_cast<size_t>(leaf)]) covers_something = true;
                after[static_cast<size_t>(leaf)] = false;
            }
            if (!covers_something) continue;
            std::optional<int> rest = cover_size(covers, after, leaf_count, i + 1);
            if (rest && *rest <= left - 1) {
                chosen.insert(cands_vec[i]);
                remaining = std::move(after);
                --left;
            }
        }
        if (left != 0) throw integrity_error("clique core: cover reconstruction failed");

        NodeOptimum candidate{target, chosen};
        bool better = !best || candidate.size < best->size ||
                      (candidate.size == best->size && candidate.set < best->set);
        if (better) {
            best = candidate;
            best_node = t;
        }
    }

    if (!best) return {Witness{false, {}, g.vertex_count() + 1}, -1};
    if (!is_clique(g, best->set))
        throw integrity_error("clique core: chosen set is not a clique");
    return {Witness{true, best->set, best->size}, best_node};
}

namespace {

struct PipelineOutcome {
    VertexSet optimal;   // reduced-instance ids
    std::string base_case;
    int chosen_node = -1;
};

// Internal vertices of a deterministic shortest path between the two
// terminals (smallest predecessor at every step).
VertexSet two_terminal_path(const Graph& g, Vertex a, Vertex b) {
    std::vector<int> dist = bfs_distances(g, a);
    std::vector<Vertex> inner;
    Vertex cur = b;
    while (dist[static_cast<size_t>(cur)] > 1) {
        Vertex next = -1;
        for (Vertex w : g.neighbors_of(cur)) {
            if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(cur)] - 1) {
                next = w;
                break;  // neighbors are ascending, first hit is smallest
            }
        }
        cur = next;
        inner.push_back(cur);
    }
    return VertexSet(std::move(inner));
}

}  // namespace

std::pair<Witness, SolveTrace> solve(const SteinerInstance& inst) {
    check_instance(inst);
    {
        std::optional<int> d = diameter(inst.graph);
        if (!d || *d > 2)
            throw class_error("solve: requires diameter <= 2, use the oracle instead");
    }

    SolveTrace trace;
    SteinerInstance state = inst;
    std::vector<Vertex> to_original = identity_map(inst.graph.vertex_count());

    PipelineOutcome outcome;
    while (true) {
        const VertexSet& x = state.terminals;
        if (x.size() == 1 || is_connected_induced(state.graph, x)) {
            outcome.base_case = "connected_terminals";
            outcome.optimal = {};
            break;
        }
        if (x.size() == 2) {
            outcome.base_case = "two_terminals";
            outcome.optimal = two_terminal_path(state.graph, x.ids()[0], x.ids()[1]);
            break;
        }

        ReductionResult twins_pass = reduce_twins(state);
        if (!twins_pass.removals.empty()) {
            for (Removal r : twins_pass.removals) {
                r.removed = to_original[static_cast<size_t>(r.removed)];
                r.partner = to_original[static_cast<size_t>(r.partner)];
                trace.removed_twins.push_back(r);
            }
            state = std::move(twins_pass.instance);
            to_original = compose(to_original, twins_pass.to_original);
            continue;
        }

        ReductionResult simplicial_pass = reduce_simplicial(state);
        if (!simplicial_pass.removals.empty()) {
            for (Removal r : simplicial_pass.removals) {
                r.removed = to_original[static_cast<size_t>(r.removed)];
                trace.removed_simplicials.push_back(r);
            }
            state = std::move(simplicial_pass.instance);
            to_original = compose(to_original, simplicial_pass.to_original);
            continue;
        }

        state.model = make_minimal(state.model);
        ReductionResult leafy_pass = reduce_leafy(state);
        if (!leafy_pass.removals.empty()) {
            for (Removal r : leafy_pass.removals) {
                r.removed = to_original[static_cast<size_t>(r.removed)];
                r.partner = to_original[static_cast<size_t>(r.partner)];
                trace.removed_leafy.push_back(r);
            }
            state = std::move(leafy_pass.instance);
            to_original = compose(to_original, leafy_pass.to_original);
            continue;
        }
        break;  // joint fixpoint reached
    }

    if (outcome.base_case.empty()) {
        auto [witness, node] = min_clique_dominating_leafy(state);
        if (!witness.yes)
            throw integrity_error("solve: clique core found no dominating clique");
        outcome.optimal = witness.set;
        outcome.chosen_node = node;
    }

    std::vector<Vertex> lifted;
    for (Vertex v : outcome.optimal) lifted.push_back(to_original[static_cast<size_t>(v)]);
    VertexSet optimal(std::move(lifted));

    if (!set_intersection(optimal, inst.terminals).empty())
        throw integrity_error("solve: witness overlaps the terminal set");
    if (!is_connected_induced(inst.graph, set_union(optimal, inst.terminals)))
        throw integrity_error("solve: witness failed re-verification on the original graph");

    trace.base_case = outcome.base_case;
    trace.chosen_node = outcome.chosen_node;
    trace.optimal_set = optimal;
    trace.reduced = std::move(state);
    trace.reduced_to_original = std::move(to_original);

    Witness result;
    result.objective = optimal.size();
    result.yes = result.objective <= inst.budget;
    if (result.yes) result.set = optimal;
    trace.witness = result;
    return {result, trace};
}

bool replacement_applicable(const Graph& g, Vertex u, Vertex v, Vertex y, Vertex z) {
    if (y == z || !g.has_edge(y, z)) return false;
    VertexSet need = set_union(neighbors(g, u, false), neighbors(g, v, false));
    VertexSet have = set_union(neighbors(g, y, false), neighbors(g, z, false));
    return set_difference(need, have).empty();
}

VertexSet replacement_apply(const VertexSet& s, const VertexSet& x, Vertex u, Vertex v, Vertex y,
                            Vertex z) {
    VertexSet out = s;
    out.erase(u);
    out.erase(v);
    out.insert(y);
    out.insert(z);
    return set_difference(out, x);
}

}  // namespace upg
