#include <doctest.h>

#include "naive_oracles.hpp"
#include "upg/gadgets.hpp"
#include "upg/oracle.hpp"
#include "upg/random.hpp"

using namespace upg;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("steiner_min basics") {
    Witness claw = steiner_min(star(3), VertexSet{1, 2, 3});
    CHECK(claw.objective == 1);
    CHECK(claw.set == VertexSet{0});

    Witness already = steiner_min(path(4), VertexSet{1, 2});
    CHECK(already.objective == 0);
    CHECK(already.set.empty());

    Witness ends = steiner_min(path(4), VertexSet{0, 3});
    CHECK(ends.objective == 2);
    CHECK(ends.set == VertexSet{1, 2});

    CHECK(steiner_min(path(4), VertexSet::full(4)).objective == 0);

    CHECK_THROWS_AS(steiner_min(Graph(3), VertexSet{0}), instance_error);  // disconnected
    CHECK_THROWS_AS(steiner_min(path(3), VertexSet{}), instance_error);
    CHECK_THROWS_AS(steiner_min(complete(30), VertexSet{0, 1}), size_error);
}

TEST_CASE("domination oracles on fixed graphs") {
    CHECK(ds_min(star(5)).objective == 1);
    CHECK(cds_min(star(5)).objective == 1);

    Witness p4_ds = ds_min(path(4));
    Witness p4_cds = cds_min(path(4));
    CHECK(p4_ds.objective == 2);
    CHECK(p4_cds.objective == 2);
    CHECK(p4_cds.set == VertexSet{1, 2});

    CHECK_THROWS_AS(cds_min(Graph(2)), instance_error);
}

TEST_CASE("budgeted searches report the exclusion bound") {
    Witness no = ds_min(path(7), 1);
    CHECK_FALSE(no.yes);
    CHECK(no.set.empty());
    CHECK(no.objective == 2);  // sizes <= 1 ruled out

    Witness yes = ds_min(path(7), 3);
    CHECK(yes.yes);
    CHECK(yes.objective <= 3);
}

TEST_CASE("pruned oracles match the naive lexicographic scan witness-for-witness") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng.below_int(7);
        Graph g = random_graph(n, rng.below_int(1000), rng);

        Witness mine = ds_min(g);
        Witness ref = naive::ds_min(g);
        CHECK(mine.objective == ref.objective);
        CHECK(mine.set == ref.set);

        if (is_connected(g) && n >= 1) {
            Witness c_mine = cds_min(g);
            Witness c_ref = naive::cds_min(g);
            CHECK(c_mine.objective == c_ref.objective);
            CHECK(c_mine.set == c_ref.set);

            VertexSet x = random_vertex_subset(n, 1 + rng.below_int(n), rng);
            Witness s_mine = steiner_min(g, x);
            Witness s_ref = naive::steiner_min(g, x);
            CHECK(s_mine.objective == s_ref.objective);
            CHECK(s_mine.set == s_ref.set);
        }

        VertexSet candidates = random_vertex_subset(n, 1 + rng.below_int(n), rng);
        VertexSet targets = random_vertex_subset(n, rng.below_int(n + 1), rng);
        Witness d_mine = dominating_clique_min(g, candidates, targets);
        Witness d_ref = naive::dominating_clique_min(g, candidates, targets);
        CHECK(d_mine.yes == d_ref.yes);
        CHECK(d_mine.objective == d_ref.objective);
        CHECK(d_mine.set == d_ref.set);
    }
}

TEST_CASE("dominating clique search") {
    Witness hub = dominating_clique_min(star(3), VertexSet{0}, VertexSet{1, 2, 3});
    CHECK(hub.objective == 1);
    CHECK(hub.set == VertexSet{0});

    // the 5-cycle has cliques only up to size 2 and none dominates
    Witness c5 = dominating_clique_min(cycle(5), VertexSet::full(5), VertexSet::full(5));
    CHECK_FALSE(c5.yes);

    Witness empty_targets = dominating_clique_min(cycle(5), VertexSet::full(5), VertexSet{});
    CHECK(empty_targets.yes);
    CHECK(empty_targets.objective == 0);
}

TEST_CASE("cds is never cheaper than ds") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(2 + rng.below_int(7), 300 + rng.below_int(700), rng);
        CHECK(cds_min(g).objective >= ds_min(g).objective);
    }
}

TEST_CASE("three_dm") {
    Witness one = three_dm(ThreeDMInstance::checked(1, {{{0, 0, 0}}}));
    CHECK(one.yes);
    CHECK(one.set == VertexSet{0});

    Witness blocked = three_dm(ThreeDMInstance::checked(2, {{{0, 0, 0}}, {{0, 1, 1}}}));
    CHECK_FALSE(blocked.yes);

    Witness pick = three_dm(
        ThreeDMInstance::checked(2, {{{0, 0, 0}}, {{1, 1, 1}}, {{0, 1, 0}}}));
    CHECK(pick.yes);
    CHECK(pick.set == VertexSet{0, 2});  // triples arrive sorted; {000,111} sit at 0 and 2

    CHECK_THROWS_AS(ThreeDMInstance::checked(1, {{{0, 0, 1}}}), instance_error);
    CHECK_THROWS_AS(ThreeDMInstance::checked(2, {{{0, 0, 0}}, {{0, 0, 0}}}), instance_error);
    CHECK_THROWS_AS(ThreeDMInstance::checked(2, {}), instance_error);
}

TEST_CASE("isomorphism") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + rng.below_int(8);
        Graph g = random_graph(n, rng.below_int(1000), rng);
        std::vector<Vertex> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<size_t>(i)],
                      perm[static_cast<size_t>(rng.below_int(i + 1))]);
        Graph h(n);
        for (const auto& [u, v] : g.edges())
            h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
        CHECK(isomorphic(g, h));
    }

    CHECK_FALSE(isomorphic(path(4), star(3)));

    // subdividing a triangle gives a 6-cycle
    Graph k3 = complete(3);
    CHECK(isomorphic(subdivide(k3).sub, cycle(6)));

    // equal degree sequences, different graphs
    Graph two_triangles(6);
    for (int base : {0, 3}) {
        two_triangles.add_edge(base, base + 1);
        two_triangles.add_edge(base + 1, base + 2);
        two_triangles.add_edge(base, base + 2);
    }
    CHECK_FALSE(isomorphic(cycle(6), two_triangles));
}

TEST_CASE("max matching against exhaustive search") {
    CHECK(max_matching(path(3)).size() == 1);
    CHECK(max_matching(cycle(4)).size() == 2);
    CHECK(max_matching(complete(4)).size() == 2);

    // Petersen graph has a perfect matching
    Graph petersen(10);
    for (int v = 0; v < 5; ++v) {
        petersen.add_edge(v, (v + 1) % 5);
        petersen.add_edge(v, v + 5);
        petersen.add_edge(v + 5, 5 + (v + 2) % 5);
    }
    CHECK(max_matching(petersen).size() == 5);

    SplitMix64 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(2 + rng.below_int(8), rng.below_int(1000), rng);
        std::vector<std::pair<Vertex, Vertex>> matching = max_matching(g);
        // it is a matching
        std::vector<int> hits(static_cast<size_t>(g.vertex_count()), 0);
        for (const auto& [u, v] : matching) {
            CHECK(g.has_edge(u, v));
            ++hits[static_cast<size_t>(u)];
            ++hits[static_cast<size_t>(v)];
        }
        for (int h : hits) CHECK(h <= 1);
        // and it is maximum
        CHECK(static_cast<int>(matching.size()) == naive::max_matching_size(g));
    }
}

TEST_CASE("edge cover obeys the matching identity") {
    SplitMix64 rng(808);
    int seen = 0;
    for (int trial = 0; trial < 80 && seen < 30; ++trial) {
        int n = 2 + rng.below_int(8);
        Graph g = random_graph(n, 300 + rng.below_int(700), rng);
        std::optional<int> ref = naive::min_edge_cover_size(g);
        auto cover = min_edge_cover(g);
        CHECK(cover.has_value() == ref.has_value());
        if (!cover) continue;
        ++seen;
        CHECK(static_cast<int>(cover->size()) == *ref);
        CHECK(static_cast<int>(cover->size()) ==
              n - static_cast<int>(max_matching(g).size()));
        // covers every vertex
        std::vector<bool> met(static_cast<size_t>(n), false);
        for (const auto& [u, v] : *cover) met[static_cast<size_t>(u)] = met[static_cast<size_t>(v)] = true;
        for (bool b : met) CHECK(b);
    }
    CHECK(seen > 0);
}
