#include "upg/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <sstream>

#include "upg/diam2.hpp"
#include "upg/enumerate.hpp"
#include "upg/gadgets.hpp"
#include "upg/io.hpp"
#include "upg/oracle.hpp"
#include "upg/random.hpp"

namespace upg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// all k-subsets of [0, pool) in lexicographic order
bool next_combination(std::vector<int>& idx, int pool) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[static_cast<size_t>(i)] < pool - (k - i)) {
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

bool separates(const Graph& g, const VertexSet& cut, Vertex a, Vertex b) {
    VertexSet keep = set_difference(VertexSet::full(g.vertex_count()), cut);
    auto [h, old_ids] = induced_subgraph(g, keep);
    int na = -1, nb = -1;
    for (size_t i = 0; i < old_ids.size(); ++i) {
        if (old_ids[i] == a) na = static_cast<int>(i);
        if (old_ids[i] == b) nb = static_cast<int>(i);
    }
    if (na < 0 || nb < 0) return false;
    return bfs_distances(h, na)[static_cast<size_t>(nb)] < 0;
}

}  // namespace

std::string rows_canonical_table(std::vector<GadgetRow> rows) {
    std::sort(rows.begin(), rows.end(),
              [](const GadgetRow& a, const GadgetRow& b) { return a.digest < b.digest; });
    std::ostringstream out;
    out << "digest n m three_dm cds steiner bound agree\n";
    for (const GadgetRow& r : rows) {
        out << r.digest << " " << r.n << " " << r.m << " " << (r.three_dm_yes ? "yes" : "no")
            << " " << r.cds << " " << r.steiner << " " << r.bound << " "
            << (r.agree ? "yes" : "no") << "\n";
    }
    return out.str();
}

GadgetSweep verify_gadget(int nmax, int mmax) {
    Clock::time_point t0 = Clock::now();
    GadgetSweep sweep;
    int instances = 0;
    int equivalence_failures = 0, structure_failures = 0;
    std::string first_bad_equivalence, first_bad_structure;

    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::array<int, 3>> grid;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r) grid.push_back({p, q, r});
        const int pool = static_cast<int>(grid.size());
        for (int m = 1; m <= std::min(mmax, pool); ++m) {
            std::vector<int> idx(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;
            do {
                std::vector<std::array<int, 3>> triples;
                for (int i : idx) triples.push_back(grid[static_cast<size_t>(i)]);
                ThreeDMInstance inst = ThreeDMInstance::checked(n, std::move(triples));
                ++instances;

                GadgetOutput gadget = steiner_from_3dm(inst);
                const Graph& g = gadget.graph;
                const int bound = gadget.budget;

                bool structure_ok = g.vertex_count() == 8 * m + 3 * n;
                structure_ok = structure_ok && validate(gadget.model, g, true).pass();
                // separator structure of each triple block
                auto a = [&](int j) { return j; };
                auto b = [&](int j) { return m + j; };
                auto c = [&](int j) { return 2 * m + j; };
                auto xv = [&](int j) { return 3 * m + j; };
                auto yv = [&](int j) { return 4 * m + j; };
                auto z3 = [&](int j) { return 7 * m + j; };
                for (int j = 0; j < m && structure_ok; ++j) {
                    structure_ok = separates(g, VertexSet{a(j), b(j), xv(j)}, c(j), yv(j)) &&
                                   separates(g, VertexSet{c(j), xv(j)}, z3(j), yv(j));
                }
                bool covered = true;
                {
                    std::vector<bool> hit_p(static_cast<size_t>(n)), hit_q(static_cast<size_t>(n)),
                        hit_r(static_cast<size_t>(n));
                    for (const auto& t : inst.triples) {
                        hit_p[static_cast<size_t>(t[0])] = true;
                        hit_q[static_cast<size_t>(t[1])] = true;
                        hit_r[static_cast<size_t>(t[2])] = true;
                    }
                    for (int i = 0; i < n; ++i)
                        covered = covered && hit_p[static_cast<size_t>(i)] &&
                                  hit_q[static_cast<size_t>(i)] && hit_r[static_cast<size_t>(i)];
                }
                if (covered && structure_ok) {
                    std::optional<int> d = diameter(g);
                    structure_ok = d && *d <= 3;
                    VertexSet big_clique = VertexSet::full(4 * m);
                    structure_ok = structure_ok && is_clique(g, big_clique) &&
                                   is_dominating(g, big_clique);
                }

                Witness tdm = three_dm(inst);
                GadgetRow row;
                row.digest = digest_3dm(inst);
                row.n = n;
                row.m = m;
                row.three_dm_yes = tdm.yes;
                row.bound = bound;
                if (covered) {
                    Witness wc = cds_min(g, bound, 64);
                    Witness ws = steiner_min(g, gadget.terminals, bound, 64);
                    row.cds = wc.yes ? std::to_string(wc.objective) : ">" + std::to_string(bound);
                    row.steiner =
                        ws.yes ? std::to_string(ws.objective) : ">" + std::to_string(bound);
                    row.agree = (tdm.yes == wc.yes) && (wc.yes == ws.yes);
                } else {
                    row.cds = "inf";
                    row.steiner = "inf";
                    row.agree = !tdm.yes;
                }
                if (!row.agree && equivalence_failures++ == 0) first_bad_equivalence = row.digest;
                if (!structure_ok && structure_failures++ == 0) first_bad_structure = row.digest;
                sweep.rows.push_back(std::move(row));
            } while (next_combination(idx, pool));
        }
    }

    sweep.report.add("gadget_equivalence",
                     equivalence_failures == 0,
                     std::to_string(instances) + " instances" +
                         (equivalence_failures ? ", first failure " + first_bad_equivalence : ""));
    sweep.report.add("gadget_structure",
                     structure_failures == 0,
                     std::to_string(instances) + " instances" +
                         (structure_failures ? ", first failure " + first_bad_structure : ""));
    sweep.report.instance_digest = fnv1a64_hex(rows_canonical_table(sweep.rows));
    sweep.report.timings.emplace_back("gadget_sweep", seconds_since(t0));
    return sweep;
}

VerificationReport verify_bipartite_gadget(int graph_count, int nmax, uint64_t seed) {
    Clock::time_point t0 = Clock::now();
    VerificationReport report;
    SplitMix64 rng(seed);
    int checked = 0, failures = 0;
    std::string first_bad;
    for (int i = 0; i < graph_count; ++i) {
        int n = 1 + rng.below_int(nmax);
        int permille = rng.below_int(1000);
        Graph g = random_graph(n, permille, rng);
        GadgetOutput gadget = steiner_from_ds(g, 1);

        bool ok = gadget.graph.vertex_count() == 2 * n + 1;
        ok = ok && bipartition(gadget.graph).has_value();
        for (int k = 1; k <= n; ++k) ok = ok && steiner_from_ds(g, k).budget == k;

        int gamma = ds_min(g).objective;
        int st = steiner_min(gadget.graph, gadget.terminals).objective;
        for (int k = 1; k <= n; ++k) ok = ok && ((gamma <= k) == (st <= k));
        ok = ok && gamma == st;

        ++checked;
        if (!ok && failures++ == 0) first_bad = digest_graph(g);
    }
    report.add("bipartite_gadget_equivalence", failures == 0,
               std::to_string(checked) + " graphs" +
                   (failures ? ", first failure " + first_bad : ""));
    report.instance_digest = fnv1a64_hex("bipartite:" + std::to_string(seed) + ":" +
                                         std::to_string(graph_count) + ":" + std::to_string(nmax));
    report.timings.emplace_back("bipartite_sweep", seconds_since(t0));
    return report;
}

namespace {

bool is_star_forest(const Graph& base, const std::vector<std::pair<Vertex, Vertex>>& part) {
    Graph h(base.vertex_count());
    for (const auto& [u, v] : part) h.add_edge(u, v);
    for (const std::vector<Vertex>& comp : connected_components(h)) {
        int centers = 0;
        for (Vertex v : comp)
            if (h.degree(v) >= 2) ++centers;
        if (centers > 1) return false;
    }
    return true;
}

Graph relabeled(const Graph& g, SplitMix64& rng) {
    const int n = g.vertex_count();
    std::vector<Vertex> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(rng.below_int(i + 1))]);
    Graph h(n);
    for (const auto& [u, v] : g.edges())
        h.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return h;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

}  // namespace

VerificationReport verify_subdivision(int graph_count, int pair_count, int graph_nmax,
                                      int pair_nmax, uint64_t seed) {
    Clock::time_point t0 = Clock::now();
    VerificationReport report;
    SplitMix64 rng(seed);

    int part_failures = 0;
    std::string first_bad;
    for (int i = 0; i < graph_count; ++i) {
        int n = 1 + rng.below_int(graph_nmax);
        Graph g = random_graph(n, rng.below_int(1000), rng);
        ThicknessWitness w = subdivide(g);

        bool ok = w.sub.vertex_count() == g.vertex_count() + g.edge_count() &&
                  w.sub.edge_count() == 2 * g.edge_count();
        std::vector<std::pair<Vertex, Vertex>> merged = w.part1;
        merged.insert(merged.end(), w.part2.begin(), w.part2.end());
        for (auto& [u, v] : merged)
            if (u > v) std::swap(u, v);
        std::sort(merged.begin(), merged.end());
        ok = ok && merged.size() == w.sub.edges().size() &&
             std::equal(merged.begin(), merged.end(), w.sub.edges().begin());
        ok = ok && is_star_forest(w.sub, w.part1) && is_star_forest(w.sub, w.part2);
        if (!ok && part_failures++ == 0) first_bad = digest_graph(g);
    }
    report.add("subdivision_star_partition", part_failures == 0,
               std::to_string(graph_count) + " graphs" +
                   (part_failures ? ", first failure " + first_bad : ""));

    int iso_failures = 0;
    int pairs_checked = 0;
    auto check_pair = [&](const Graph& g1, const Graph& g2) {
        auto [plain, subdivided] = iso_transport(g1, g2);
        ++pairs_checked;
        if (plain != subdivided) ++iso_failures;
    };
    // crafted equal-degree-sequence non-isomorphic pairs
    {
        Graph two_triangles(6);
        for (int base : {0, 3}) {
            two_triangles.add_edge(base, base + 1);
            two_triangles.add_edge(base + 1, base + 2);
            two_triangles.add_edge(base, base + 2);
        }
        check_pair(cycle(6), two_triangles);

        Graph triangle_plus_path(6);  // K3 u P3
        triangle_plus_path.add_edge(0, 1);
        triangle_plus_path.add_edge(1, 2);
        triangle_plus_path.add_edge(0, 2);
        triangle_plus_path.add_edge(3, 4);
        triangle_plus_path.add_edge(4, 5);
        Graph square_plus_edge(6);  // C4 u K2
        square_plus_edge.add_edge(0, 1);
        square_plus_edge.add_edge(1, 2);
        square_plus_edge.add_edge(2, 3);
        square_plus_edge.add_edge(0, 3);
        square_plus_edge.add_edge(4, 5);
        check_pair(triangle_plus_path, square_plus_edge);
    }
    while (pairs_checked < pair_count) {
        int n = 1 + rng.below_int(pair_nmax);
        Graph g1 = random_graph(n, rng.below_int(1000), rng);
        if (rng.permille(500)) {
            check_pair(g1, relabeled(g1, rng));  // isomorphic by construction
        } else {
            check_pair(g1, random_graph(n, rng.below_int(1000), rng));
        }
    }
    report.add("subdivision_iso_transport", iso_failures == 0,
               std::to_string(pairs_checked) + " pairs" +
                   (iso_failures ? ", " + std::to_string(iso_failures) + " disagreements" : ""));
    report.instance_digest =
        fnv1a64_hex("subdivision:" + std::to_string(seed) + ":" + std::to_string(graph_count) +
                    ":" + std::to_string(pair_count));
    report.timings.emplace_back("subdivision_sweep", seconds_since(t0));
    return report;
}

VerificationReport verify_solver(int nmax, int sample_cap, uint64_t seed) {
    Clock::time_point t0 = Clock::now();
    VerificationReport report;
    SplitMix64 rng(seed);
    int graphs_swept = 0, instances = 0, failures = 0;
    std::string first_bad;

    // connected graphs per isomorphism class; the known counts pin the
    // enumerator before the sweep trusts it
    static constexpr int kConnectedCounts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    bool counts_ok = true;
    for (int n = 2; n <= std::min(nmax, 8); ++n)
        counts_ok = counts_ok &&
                    static_cast<int>(connected_graphs(n).size()) == kConnectedCounts[n];
    report.add("graph_enumeration_counts", counts_ok,
               "connected graph classes up to n=" + std::to_string(std::min(nmax, 8)));

    for (int n = 2; n <= nmax; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            std::optional<int> d = diameter(g);
            if (!d || *d > 2) continue;
            if (!is_chordal(g)) continue;
            std::optional<TreeModel> model = search_model(g, true);
            if (!model) continue;
            ++graphs_swept;

            std::vector<uint64_t> masks;
            const uint64_t all = (uint64_t{1} << n) - 1;
            int subsets_with_two = (1 << n) - 1 - n;
            if (subsets_with_two <= sample_cap) {
                for (uint64_t mask = 1; mask <= all; ++mask)
                    if (std::popcount(mask) >= 2) masks.push_back(mask);
            } else {
                std::set<uint64_t> picked;
                while (static_cast<int>(picked.size()) < sample_cap) {
                    uint64_t mask = rng.next() & all;
                    if (std::popcount(mask) >= 2) picked.insert(mask);
                }
                masks.assign(picked.begin(), picked.end());
            }

            for (uint64_t mask : masks) {
                std::vector<Vertex> ids;
                for (int v = 0; v < n; ++v)
                    if (mask & (uint64_t{1} << v)) ids.push_back(v);
                SteinerInstance inst{g, *model, VertexSet(std::move(ids)), n};
                auto [witness, trace] = solve(inst);
                Witness oracle = steiner_min(g, inst.terminals);
                bool ok = witness.objective == oracle.objective;
                ok = ok && is_connected_induced(
                               g, set_union(trace.optimal_set, inst.terminals));
                ok = ok && set_intersection(trace.optimal_set, inst.terminals).empty();
                ++instances;
                if (!ok && failures++ == 0)
                    first_bad = digest_graph(g) + " mask=" + std::to_string(mask);
            }
        }
    }
    report.add("solver_matches_oracle", failures == 0,
               std::to_string(graphs_swept) + " graphs, " + std::to_string(instances) +
                   " instances" + (failures ? ", first failure " + first_bad : ""));
    report.instance_digest = fnv1a64_hex("solver:" + std::to_string(seed) + ":" +
                                         std::to_string(nmax) + ":" + std::to_string(sample_cap));
    report.timings.emplace_back("solver_sweep", seconds_since(t0));
    return report;
}

namespace {

struct FuzzCounts {
    int done = 0;
    int failures = 0;
};

// random connected undirected-path instance, graph on [5, 9] vertices
std::optional<TreeModel> draw_model(SplitMix64& rng) {
    int vertices = 5 + rng.below_int(5);
    int hosts = 2 + rng.below_int(5);
    return random_connected_path_model(vertices, hosts, rng);
}

// distinct paths rule out closed twins; hosts of 3..5 nodes carry 6..15 paths
std::optional<TreeModel> draw_distinct_model(SplitMix64& rng) {
    int hosts = 3 + rng.below_int(3);
    int pool = hosts * (hosts + 1) / 2;
    int vertices = std::min(5 + rng.below_int(5), pool);
    return random_distinct_path_model(vertices, hosts, rng);
}

// tiny hosts give dense overlap, where the replacement hypothesis is common
std::optional<TreeModel> draw_dense_model(SplitMix64& rng) {
    return random_connected_path_model(5 + rng.below_int(5), 2 + rng.below_int(2), rng);
}

}  // namespace

VerificationReport verify_lemmas(int trials, uint64_t seed) {
    Clock::time_point t0 = Clock::now();
    VerificationReport report;
    const long attempt_cap = static_cast<long>(trials) * 400;

    // twin removal preserves the objective
    {
        SplitMix64 rng(seed);
        FuzzCounts counts;
        for (long attempt = 0; counts.done < trials && attempt < attempt_cap; ++attempt) {
            std::optional<TreeModel> base = draw_model(rng);
            if (!base) continue;
            // duplicate one vertex's path: the copy is a twin by construction
            TreeModel model = *base;
            Vertex doubled = rng.below_int(model.vertex_count());
            model.assignment.push_back(model.assignment[static_cast<size_t>(doubled)]);
            Graph g = realize(model);
            const int n = g.vertex_count();
            VertexSet x = random_vertex_subset(n, 3 + rng.below_int(n - 2), rng);
            SteinerInstance inst{g, model, x, n};
            ReductionResult red = reduce_twins(inst);
            if (red.removals.empty()) continue;
            ++counts.done;
            int before = steiner_min(g, x).objective;
            int after = steiner_min(red.instance.graph, red.instance.terminals).objective;
            if (before != after) ++counts.failures;
        }
        report.add("twin_reduction_preserves_objective", counts.failures == 0 && counts.done == trials,
                   std::to_string(counts.done) + " pairs, " + std::to_string(counts.failures) +
                       " mismatches");
    }

    // simplicial removal preserves the objective
    {
        SplitMix64 rng(seed + 1);
        FuzzCounts counts;
        for (long attempt = 0; counts.done < trials && attempt < attempt_cap; ++attempt) {
            std::optional<TreeModel> model = draw_model(rng);
            if (!model) continue;
            Graph g = realize(*model);
            const int n = g.vertex_count();
            VertexSet simp = simplicial_vertices(g);
            if (simp.empty()) continue;
            Vertex excluded = simp.ids()[static_cast<size_t>(
                rng.below_int(simp.size()))];
            VertexSet pool = set_difference(VertexSet::full(n), VertexSet{excluded});
            int size = 1 + rng.below_int(pool.size());
            VertexSet x;
            {
                std::vector<Vertex> ids(pool.begin(), pool.end());
                for (int i = 0; i < size; ++i) {
                    int j = i + rng.below_int(static_cast<int>(ids.size()) - i);
                    std::swap(ids[static_cast<size_t>(i)], ids[static_cast<size_t>(j)]);
                }
                ids.resize(static_cast<size_t>(size));
                x = VertexSet(std::move(ids));
            }
            SteinerInstance inst{g, *model, x, n};
            ReductionResult red = reduce_simplicial(inst);
            if (red.removals.empty()) continue;
            ++counts.done;
            int before = steiner_min(g, x).objective;
            int after = steiner_min(red.instance.graph, red.instance.terminals).objective;
            if (before != after) ++counts.failures;
        }
        report.add("simplicial_reduction_preserves_objective",
                   counts.failures == 0 && counts.done == trials,
                   std::to_string(counts.done) + " pairs, " + std::to_string(counts.failures) +
                       " mismatches");
    }

    // leafy removal preserves the objective
    {
        SplitMix64 rng(seed + 2);
        FuzzCounts counts;
        for (long attempt = 0; counts.done < trials && attempt < attempt_cap; ++attempt) {
            std::optional<TreeModel> raw = draw_distinct_model(rng);
            if (!raw) continue;
            TreeModel model = make_minimal(*raw);
            Graph g = realize(model);
            const int n = g.vertex_count();
            if (!twins(g).empty()) continue;
            LeafyReport lr = leafy_vertices(model);
            if (lr.leafy.empty()) continue;
            // a terminal set containing every leafy vertex plus one path that
            // reaches a host leaf
            std::vector<int> leaves = host_leaves(model);
            std::vector<bool> is_leaf(static_cast<size_t>(model.node_count()), false);
            for (int t : leaves) is_leaf[static_cast<size_t>(t)] = true;
            Vertex forcing = -1;
            for (Vertex v = 0; v < n && forcing < 0; ++v) {
                if (lr.leafy.contains(v)) continue;
                for (int t : model.assignment[static_cast<size_t>(v)])
                    if (is_leaf[static_cast<size_t>(t)]) {
                        forcing = v;
                        break;
                    }
            }
            if (forcing < 0) continue;
            VertexSet x = set_union(lr.leafy, VertexSet{forcing});
            // pad with random extras
            for (Vertex v = 0; v < n; ++v)
                if (rng.permille(250)) x.insert(v);
            if (x.size() < 3) continue;
            SteinerInstance inst{g, model, x, n};
            ReductionResult red = reduce_leafy(inst);
            if (red.removals.empty()) continue;
            ++counts.done;
            int before = steiner_min(g, x).objective;
            int after = steiner_min(red.instance.graph, red.instance.terminals).objective;
            if (before != after) ++counts.failures;
        }
        report.add("leafy_reduction_preserves_objective",
                   counts.failures == 0 && counts.done == trials,
                   std::to_string(counts.done) + " pairs, " + std::to_string(counts.failures) +
                       " mismatches");
    }

    // replacement exchange keeps feasibility
    {
        SplitMix64 rng(seed + 3);
        FuzzCounts counts;
        for (long attempt = 0; counts.done < trials && attempt < attempt_cap; ++attempt) {
            std::optional<TreeModel> model = draw_dense_model(rng);
            if (!model) continue;
            Graph g = realize(*model);
            const int n = g.vertex_count();
            VertexSet x = random_vertex_subset(n, 1 + rng.below_int(n - 2), rng);
            VertexSet s = set_difference(VertexSet::full(n), x);  // feasible: s u x = V
            if (rng.permille(300)) {
                // sometimes exercise smaller feasible sets too
                for (int round = 0; round < 2; ++round) {
                    if (s.empty()) break;
                    Vertex v = s.ids()[static_cast<size_t>(rng.below_int(s.size()))];
                    VertexSet smaller = s;
                    smaller.erase(v);
                    if (is_connected_induced(g, set_union(smaller, x))) s = std::move(smaller);
                }
            }
            // nonadjacent pair inside s
            Vertex u = -1, v = -1;
            for (size_t i = 0; i < s.ids().size() && u < 0; ++i)
                for (size_t j = i + 1; j < s.ids().size() && u < 0; ++j)
                    if (!g.has_edge(s.ids()[i], s.ids()[j])) {
                        u = s.ids()[i];
                        v = s.ids()[j];
                    }
            if (u < 0) continue;
            // adjacent pair covering both neighborhoods
            Vertex y = -1, z = -1;
            for (const auto& [cy, cz] : g.edges())
                if (replacement_applicable(g, u, v, cy, cz)) {
                    y = cy;
                    z = cz;
                    break;
                }
            if (y < 0) continue;
            ++counts.done;
            VertexSet replaced = replacement_apply(s, x, u, v, y, z);
            if (!is_connected_induced(g, set_union(replaced, x))) ++counts.failures;
        }
        report.add("replacement_preserves_feasibility",
                   counts.failures == 0 && counts.done == trials,
                   std::to_string(counts.done) + " trials, " + std::to_string(counts.failures) +
                       " infeasible results");
    }

    report.instance_digest =
        fnv1a64_hex("lemmas:" + std::to_string(seed) + ":" + std::to_string(trials));
    report.timings.emplace_back("lemma_fuzzing", seconds_since(t0));
    return report;
}

}  // namespace upg
