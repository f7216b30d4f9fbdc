#include <doctest.h>

#include "naive_oracles.hpp"
#include "upg/diam2.hpp"
#include "upg/gadgets.hpp"
#include "upg/oracle.hpp"
#include "upg/random.hpp"

using namespace upg;

namespace {

// claw K_{1,3}: center 0 spans the host path, leaves 1,2 at the host ends,
// leaf 3 on the middle node
TreeModel claw_model() {
    TreeModel m;
    m.host = Graph(3);
    m.host.add_edge(0, 1);
    m.host.add_edge(1, 2);
    m.assignment = {VertexSet{0, 1, 2}, VertexSet{0}, VertexSet{2}, VertexSet{1}};
    return m;
}

SteinerInstance claw_instance(VertexSet terminals) {
    SteinerInstance inst;
    inst.model = claw_model();
    inst.graph = realize(inst.model);
    inst.terminals = std::move(terminals);
    return inst;
}

// interval model of the path P_n: hosts 0..n-2, vertex i on {i-1, i}
TreeModel path_model(int n) {
    TreeModel m;
    m.host = Graph(n - 1);
    for (int t = 0; t + 1 < n - 1; ++t) m.host.add_edge(t, t + 1);
    m.assignment.push_back(VertexSet{0});
    for (int v = 1; v + 1 < n; ++v) m.assignment.push_back(VertexSet{v - 1, v});
    m.assignment.push_back(VertexSet{n - 2});
    return m;
}

// dense overlap (tiny host, many paths) makes the replacement hypothesis
// easy to hit
std::optional<TreeModel> random_path_model_dense(SplitMix64& rng) {
    return random_connected_path_model(5 + rng.below_int(4), 2 + rng.below_int(2), rng);
}

// a duplicated vertex gives a twin pair by construction
SteinerInstance doubled_instance(const TreeModel& base, Vertex doubled, VertexSet terminals) {
    SteinerInstance inst;
    inst.model = base;
    inst.model.assignment.push_back(base.assignment[static_cast<size_t>(doubled)]);
    inst.graph = realize(inst.model);
    inst.terminals = std::move(terminals);
    return inst;
}

}  // namespace

TEST_CASE("instance validation") {
    SteinerInstance inst = claw_instance(VertexSet{1, 2});
    CHECK_NOTHROW(check_instance(inst));

    SteinerInstance no_terminals = claw_instance(VertexSet{});
    CHECK_THROWS_AS(check_instance(no_terminals), instance_error);

    SteinerInstance broken = claw_instance(VertexSet{1});
    broken.model.assignment[0] = VertexSet{0};  // drops edges the graph has
    CHECK_THROWS_AS(check_instance(broken), instance_error);
}

TEST_CASE("solve base cases") {
    // connected terminal set
    auto [w0, t0] = solve(claw_instance(VertexSet{0, 1}));
    CHECK(w0.objective == 0);
    CHECK(t0.base_case == "connected_terminals");

    // single terminal
    auto [w1, t1] = solve(claw_instance(VertexSet{2}));
    CHECK(w1.objective == 0);

    // two terminals at distance 2
    auto [w2, t2] = solve(claw_instance(VertexSet{1, 2}));
    CHECK(w2.objective == 1);
    CHECK(w2.set == VertexSet{0});
    CHECK(t2.base_case == "two_terminals");
}

TEST_CASE("solve the claw with all leaves as terminals") {
    auto [w, trace] = solve(claw_instance(VertexSet{1, 2, 3}));
    CHECK(w.objective == 1);
    CHECK(w.set == VertexSet{0});
    CHECK(w.yes);
    // the leaves are twins, so the pipeline reduces before the base case
    CHECK(trace.removed_twins.size() >= 1);
}

TEST_CASE("budget only flips the yes/no field") {
    SteinerInstance inst = claw_instance(VertexSet{1, 2, 3});
    inst.budget = 0;
    auto [w, trace] = solve(inst);
    CHECK_FALSE(w.yes);
    CHECK(w.set.empty());
    CHECK(w.objective == 1);
    CHECK(trace.optimal_set == VertexSet{0});
}

TEST_CASE("solve refuses the wrong graph class") {
    ThreeDMInstance inst3 = ThreeDMInstance::checked(1, {{{0, 0, 0}}});
    GadgetOutput gadget = steiner_from_3dm(inst3);  // diameter 3
    SteinerInstance inst{gadget.graph, gadget.model, gadget.terminals, gadget.budget};
    CHECK_THROWS_AS(solve(inst), class_error);
}

TEST_CASE("twin reduction") {
    // duplicated non-terminal
    SteinerInstance dup = doubled_instance(claw_model(), 0, VertexSet{1, 2, 3});
    ReductionResult red = reduce_twins(dup);
    CHECK(red.removals.size() >= 1);
    // twin-free unless the terminal count dropped below three
    CHECK((twins(red.instance.graph).empty() || red.instance.terminals.size() < 3));
    int before = steiner_min(dup.graph, dup.terminals).objective;
    int after = steiner_min(red.instance.graph, red.instance.terminals).objective;
    CHECK(before == after);

    // twin pair inside the terminal set on a 6-vertex instance
    TreeModel m = path_model(5);
    SteinerInstance both = doubled_instance(m, 2, VertexSet{0, 2, 4, 5});  // 5 copies vertex 2
    ReductionResult red2 = reduce_twins(both);
    CHECK_FALSE(red2.removals.empty());
    CHECK(steiner_min(both.graph, both.terminals).objective ==
          steiner_min(red2.instance.graph, red2.instance.terminals).objective);
    // one of the pair stays a terminal
    CHECK(red2.instance.terminals.size() == both.terminals.size() - 1);

    // twin-free instance is untouched
    SteinerInstance clean{realize(path_model(5)), path_model(5), VertexSet{0, 2, 4}, 5};
    CHECK(reduce_twins(clean).removals.empty());
}

TEST_CASE("simplicial reduction") {
    // pendant non-terminals of a path cascade away one by one
    TreeModel m = path_model(7);
    SteinerInstance inst{realize(m), m, VertexSet{0}, 7};
    ReductionResult red = reduce_simplicial(inst);
    CHECK(red.removals.size() == 6);  // everything but the terminal
    CHECK(red.instance.graph.vertex_count() == 1);
    CHECK(steiner_min(inst.graph, inst.terminals).objective ==
          steiner_min(red.instance.graph, red.instance.terminals).objective);

    // identity when every simplicial vertex is a terminal
    SteinerInstance covered{realize(m), m, VertexSet{0, 6}, 7};
    CHECK(reduce_simplicial(covered).removals.empty());
}

TEST_CASE("leafy reduction on the claw") {
    SteinerInstance inst = claw_instance(VertexSet{0, 1, 2, 3});
    ReductionResult red = reduce_leafy(inst);
    CHECK(red.removals.size() == 2);  // both host-end leaves go
    for (const Removal& r : red.removals) CHECK(r.kind == Removal::Kind::Leafy);
    CHECK(is_connected_induced(red.instance.graph, red.instance.terminals));
    CHECK(steiner_min(inst.graph, inst.terminals).objective == 0);
    CHECK(steiner_min(red.instance.graph, red.instance.terminals).objective == 0);

    // identity when no non-leafy terminal path reaches a host leaf
    SteinerInstance inert = claw_instance(VertexSet{1, 2, 3});
    CHECK(reduce_leafy(inert).removals.empty());

    // non-minimal models are rejected
    TreeModel bloated = claw_model();
    bloated.host = Graph(4);
    bloated.host.add_edge(0, 1);
    bloated.host.add_edge(1, 2);
    bloated.host.add_edge(2, 3);
    bloated.assignment = {VertexSet{0, 1, 2, 3}, VertexSet{0}, VertexSet{2, 3}, VertexSet{1}};
    SteinerInstance bad{realize(bloated), bloated, VertexSet{0, 1, 2, 3}, 4};
    CHECK_THROWS_AS(reduce_leafy(bad), contract_error);
}

TEST_CASE("leafy reduction preserves the objective on a crafted instance") {
    // host star with three arms; center vertex, three leafy terminals, one
    // broad terminal reaching an arm end, plus connectors
    TreeModel m;
    m.host = Graph(4);
    m.host.add_edge(0, 1);
    m.host.add_edge(0, 2);
    m.host.add_edge(0, 3);
    m.assignment = {
        VertexSet{1},     // 0: leafy
        VertexSet{2},     // 1: leafy
        VertexSet{3},     // 2: leafy
        VertexSet{0, 1},  // 3: connector, reaches host leaf 1
        VertexSet{0, 2},  // 4: connector
        VertexSet{0, 3},  // 5: connector
    };
    Graph g = realize(m);
    REQUIRE(twins(g).empty());
    TreeModel minimal = make_minimal(m);
    Graph g2 = realize(minimal);
    REQUIRE(g2 == g);
    SteinerInstance inst{g, minimal, VertexSet{0, 1, 2, 3}, 6};  // terminal 3 spans leaf 1
    LeafyReport lr = leafy_vertices(minimal);
    REQUIRE(lr.leafy == VertexSet{0, 1, 2});
    ReductionResult red = reduce_leafy(inst);
    CHECK_FALSE(red.removals.empty());
    CHECK(steiner_min(inst.graph, inst.terminals).objective ==
          steiner_min(red.instance.graph, red.instance.terminals).objective);
}

TEST_CASE("clique core on the reduced claw") {
    SteinerInstance inst = claw_instance(VertexSet{1, 2, 3});
    auto [w, node] = min_clique_dominating_leafy(inst);
    CHECK(w.yes);
    CHECK(w.objective == 1);
    CHECK(w.set == VertexSet{0});
    CHECK(node == 0);  // smallest host node among the optima

    // contract violations
    SteinerInstance connected_x = claw_instance(VertexSet{0, 1});
    CHECK_THROWS_AS(min_clique_dominating_leafy(connected_x), contract_error);
}

TEST_CASE("clique core agrees with the clique oracle on reduced instances") {
    SplitMix64 rng(321);
    int seen = 0;
    for (int trial = 0; trial < 2000 && seen < 40; ++trial) {
        std::optional<TreeModel> raw = random_distinct_path_model(4 + rng.below_int(3),
                                                                  3 + rng.below_int(2), rng);
        if (!raw) continue;
        TreeModel m = make_minimal(*raw);
        Graph g = realize(m);
        if (!twins(g).empty()) continue;
        std::optional<int> d = diameter(g);
        if (!d || *d > 2) continue;
        LeafyReport lr = leafy_vertices(m);
        if (lr.leafy.size() < 2) continue;
        // terminals: the leafy set plus interior-path vertices only
        std::vector<int> leaves = host_leaves(m);
        std::vector<bool> is_leaf(static_cast<size_t>(m.node_count()), false);
        for (int t : leaves) is_leaf[static_cast<size_t>(t)] = true;
        VertexSet x = lr.leafy;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (x.contains(v)) continue;
            bool touches_leaf = false;
            for (int t : m.assignment[static_cast<size_t>(v)])
                touches_leaf = touches_leaf || is_leaf[static_cast<size_t>(t)];
            if (!touches_leaf && rng.permille(300)) x.insert(v);
        }
        if (x.size() < 3 || is_connected_induced(g, x)) continue;
        SteinerInstance inst{g, m, x, g.vertex_count()};
        auto [w, node] = min_clique_dominating_leafy(inst);
        Witness oracle = dominating_clique_min(g, set_difference(VertexSet::full(g.vertex_count()), x),
                                               lr.leafy);
        CHECK(w.yes == oracle.yes);
        if (w.yes) {
            CHECK(w.objective == oracle.objective);
            // both sides return the lexicographically smallest optimum
            CHECK(w.set == oracle.set);
            // the chosen node lies in every selected path
            for (Vertex v : w.set)
                CHECK(m.assignment[static_cast<size_t>(v)].contains(node));
            // leaf coverage: the selected paths hit every host leaf
            VertexSet covered;
            for (Vertex v : w.set)
                covered = set_union(covered, m.assignment[static_cast<size_t>(v)]);
            for (int leaf : leaves) CHECK(covered.contains(leaf));
        }
        ++seen;
    }
    CHECK(seen >= 20);
}

TEST_CASE("solve agrees with the oracle on random diameter-2 path graphs") {
    SplitMix64 rng(654);
    int seen = 0;
    for (int trial = 0; trial < 600 && seen < 60; ++trial) {
        std::optional<TreeModel> m = random_connected_path_model(4 + rng.below_int(5),
                                                                 2 + rng.below_int(4), rng);
        if (!m) continue;
        Graph g = realize(*m);
        std::optional<int> d = diameter(g);
        if (!d || *d > 2) continue;
        int n = g.vertex_count();
        VertexSet x = random_vertex_subset(n, 2 + rng.below_int(n - 1), rng);
        SteinerInstance inst{g, *m, x, n};
        auto [w, trace] = solve(inst);
        Witness oracle = steiner_min(g, x);
        CHECK(w.objective == oracle.objective);
        CHECK(is_connected_induced(g, set_union(trace.optimal_set, x)));
        ++seen;
    }
    CHECK(seen >= 30);
}

TEST_CASE("reductions preserve the oracle objective step by step") {
    SplitMix64 rng(987);
    int seen = 0;
    for (int trial = 0; trial < 300 && seen < 30; ++trial) {
        std::optional<TreeModel> m = random_connected_path_model(5 + rng.below_int(4),
                                                                 2 + rng.below_int(4), rng);
        if (!m) continue;
        Graph g = realize(*m);
        int n = g.vertex_count();
        VertexSet x = random_vertex_subset(n, 3 + rng.below_int(n - 2), rng);
        SteinerInstance inst{g, *m, x, n};
        int reference = steiner_min(g, x).objective;

        ReductionResult t = reduce_twins(inst);
        CHECK(steiner_min(t.instance.graph, t.instance.terminals).objective == reference);
        ReductionResult s = reduce_simplicial(t.instance);
        CHECK(steiner_min(s.instance.graph, s.instance.terminals).objective == reference);
        ++seen;
    }
    CHECK(seen >= 15);
}

TEST_CASE("solve trace replays onto the reduced instance") {
    SteinerInstance inst = doubled_instance(claw_model(), 0, VertexSet{1, 2, 3});
    auto [w, trace] = solve(inst);
    CHECK(w.objective == 1);

    // replay every removal on a copy of the original
    SteinerInstance replay = inst;
    std::vector<Removal> all;
    all.insert(all.end(), trace.removed_twins.begin(), trace.removed_twins.end());
    all.insert(all.end(), trace.removed_simplicials.begin(), trace.removed_simplicials.end());
    all.insert(all.end(), trace.removed_leafy.begin(), trace.removed_leafy.end());
    // removals are recorded in original ids; map as we delete
    std::vector<Vertex> live(static_cast<size_t>(inst.graph.vertex_count()));
    for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<Vertex>(i);
    for (const Removal& r : all) {
        Vertex local = -1;
        for (size_t i = 0; i < live.size(); ++i)
            if (live[i] == r.removed) local = static_cast<Vertex>(i);
        REQUIRE(local >= 0);
        auto [g2, old_ids] = remove_vertex(replay.graph, local);
        std::vector<Vertex> next_live;
        std::vector<VertexSet> next_assign;
        std::vector<Vertex> next_terms;
        for (size_t i = 0; i < old_ids.size(); ++i) {
            next_live.push_back(live[static_cast<size_t>(old_ids[i])]);
            next_assign.push_back(replay.model.assignment[static_cast<size_t>(old_ids[i])]);
            if (replay.terminals.contains(old_ids[i])) next_terms.push_back(static_cast<int>(i));
        }
        replay.graph = std::move(g2);
        replay.model.assignment = std::move(next_assign);
        replay.terminals = VertexSet(std::move(next_terms));
        live = std::move(next_live);
    }
    CHECK(replay.graph == trace.reduced.graph);
    CHECK(replay.terminals == trace.reduced.terminals);
}

TEST_CASE("replacement exchange") {
    // path 0-1-2-3-4 made diameter-2 by a universal-ish vertex is overkill;
    // check the predicate mechanics directly on the claw
    SteinerInstance inst = claw_instance(VertexSet{1, 2});
    const Graph& g = inst.graph;
    CHECK_FALSE(replacement_applicable(g, 1, 2, 1, 2));  // leaves are nonadjacent
    // u=1, v=2 nonadjacent members; y=0,z=3 adjacent and N(1) u N(2) = {0}
    CHECK(replacement_applicable(g, 1, 2, 0, 3));

    SplitMix64 rng(111);
    int seen = 0;
    for (int trial = 0; trial < 3000 && seen < 40; ++trial) {
        std::optional<TreeModel> m = random_path_model_dense(rng);
        if (!m) continue;
        Graph h = realize(*m);
        int n = h.vertex_count();
        VertexSet x = random_vertex_subset(n, 1 + rng.below_int(n - 2), rng);
        VertexSet s = set_difference(VertexSet::full(n), x);  // feasible outright
        Vertex u = -1, v = -1;
        for (size_t i = 0; i < s.ids().size() && u < 0; ++i)
            for (size_t j = i + 1; j < s.ids().size() && u < 0; ++j)
                if (!h.has_edge(s.ids()[i], s.ids()[j])) {
                    u = s.ids()[i];
                    v = s.ids()[j];
                }
        if (u < 0) continue;
        for (const auto& [y, z] : h.edges()) {
            if (!replacement_applicable(h, u, v, y, z)) continue;
            VertexSet swapped = replacement_apply(s, x, u, v, y, z);
            CHECK(is_connected_induced(h, set_union(swapped, x)));
            ++seen;
            break;
        }
    }
    CHECK(seen >= 10);
}

TEST_CASE("beyond oracle reach the core still matches the clique oracle") {
    // the subset-enumeration Steiner oracle stops near 24 vertices, but the
    // clique-constrained search stays fast, so the reduced instance of a
    // large solve can be cross-checked against dominating_clique_min
    SplitMix64 rng(777);
    int cores = 0;
    for (int trial = 0; trial < 200 && cores < 12; ++trial) {
        // star host, one leafy terminal per arm, plus a pile of random
        // connector paths; the terminals are independent by construction
        int arms = 4 + rng.below_int(3);
        int extras = 16 + rng.below_int(21);
        TreeModel m;
        m.host = Graph(arms + 1);
        for (int i = 0; i < arms; ++i) m.host.add_edge(0, i + 1);
        std::vector<Vertex> terminals;
        for (int i = 0; i < arms; ++i) {
            m.assignment.push_back(VertexSet{i + 1});
            terminals.push_back(i);
        }
        for (int e = 0; e < extras; ++e) {
            int a = rng.below_int(arms + 1);
            int b = rng.below_int(arms + 1);
            VertexSet path{a, b};
            if (a != 0 && b != 0 && a != b) path.insert(0);  // go through the hub
            m.assignment.push_back(path);
        }
        Graph g = realize(m);
        if (!is_connected(g)) continue;
        std::optional<int> d = diameter(g);
        if (!d || *d > 2) continue;
        int n = g.vertex_count();
        VertexSet x(std::move(terminals));
        if (is_connected_induced(g, x)) continue;
        SteinerInstance inst{g, m, x, n};
        auto [w, trace] = solve(inst);
        // feasibility on the original graph was already re-verified inside
        // solve; check optimality through the reduced instance
        if (trace.base_case.empty()) {
            ++cores;
            const SteinerInstance& red = trace.reduced;
            LeafyReport lr = leafy_vertices(red.model);
            Witness clique = dominating_clique_min(
                red.graph,
                set_difference(VertexSet::full(red.graph.vertex_count()), red.terminals),
                lr.leafy, std::nullopt, 64);
            REQUIRE(clique.yes);
            CHECK(clique.objective == w.objective);
        }
        // a solved instance is trivially solved again with S promoted
        VertexSet bigger = set_union(x, trace.optimal_set);
        CHECK(steiner_min(g, bigger, 0, 64).objective == 0);
    }
    CHECK(cores >= 6);
}

TEST_CASE("broom family solves to the closed-form edge-cover optimum") {
    // k leafy terminals on a star host plus one connector per leaf pair; the
    // core must pick a minimum edge cover of the k leaves, size ceil(k/2) --
    // far beyond what the enumeration oracle could confirm
    for (int k : {5, 9, 13}) {
        TreeModel m;
        m.host = Graph(k + 1);  // node 0 is the center
        for (int i = 0; i < k; ++i) m.host.add_edge(0, i + 1);
        std::vector<Vertex> terminals;
        for (int i = 0; i < k; ++i) {
            m.assignment.push_back(VertexSet{i + 1});
            terminals.push_back(i);
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                m.assignment.push_back(VertexSet{i + 1, 0, j + 1});
        SteinerInstance inst{realize(m), m, VertexSet(std::move(terminals)),
                             k + k * (k - 1) / 2};
        auto [w, trace] = solve(inst);
        CHECK(w.objective == (k + 1) / 2);
        CHECK(trace.base_case.empty());
        CHECK(trace.chosen_node == 0);  // the star center sees every connector
        CHECK(is_clique(inst.graph, w.set));
    }
}

TEST_CASE("adding a universal non-terminal never raises the objective") {
    SplitMix64 rng(246);
    int seen = 0;
    for (int trial = 0; trial < 300 && seen < 25; ++trial) {
        // interval-style host path: a full-host path is universal
        TreeModel m = random_interval_model(4 + rng.below_int(4), 2 + rng.below_int(4), rng);
        Graph g = realize(m);
        if (!is_connected(g)) continue;
        std::optional<int> d = diameter(g);
        if (!d || *d > 2) continue;
        int n = g.vertex_count();
        VertexSet x = random_vertex_subset(n, 2 + rng.below_int(n - 1), rng);
        SteinerInstance inst{g, m, x, n};
        auto [w, trace] = solve(inst);

        TreeModel wider = m;
        wider.assignment.push_back(VertexSet::full(m.node_count()));
        SteinerInstance bigger{realize(wider), wider, x, n + 1};
        std::optional<int> d2 = diameter(bigger.graph);
        REQUIRE(d2.has_value());
        REQUIRE(*d2 <= 2);
        auto [w2, trace2] = solve(bigger);
        CHECK(w2.objective <= w.objective);
        ++seen;
    }
    CHECK(seen >= 10);
}
