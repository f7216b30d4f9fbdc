#include <benchmark/benchmark.h>

#include "upg/diam2.hpp"
#include "upg/gadgets.hpp"
#include "upg/oracle.hpp"
#include "upg/random.hpp"
#include "upg/tree_model.hpp"

namespace {

// diameter-2 undirected path family: k leafy terminals on a star host plus
// one connector path l_i - center - l_j per leaf pair; the optimum is a
// minimum edge cover of the leaf set, size ceil(k/2)
upg::SteinerInstance broom_instance(int k) {
    upg::TreeModel m;
    m.host = upg::Graph(k + 1);  // node 0 is the center
    for (int i = 0; i < k; ++i) m.host.add_edge(0, i + 1);
    std::vector<upg::Vertex> terminals;
    for (int i = 0; i < k; ++i) {
        m.assignment.push_back(upg::VertexSet{i + 1});
        terminals.push_back(i);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            m.assignment.push_back(upg::VertexSet{i + 1, 0, j + 1});
    upg::SteinerInstance inst;
    inst.graph = upg::realize(m);
    inst.model = std::move(m);
    inst.terminals = upg::VertexSet(std::move(terminals));
    inst.budget = k;
    return inst;
}

void BM_gadget_build(benchmark::State& state) {
    upg::SplitMix64 rng(7);
    int n = static_cast<int>(state.range(0));
    upg::ThreeDMInstance inst = upg::random_3dm(n, 3 * n, rng);
    for (auto _ : state) {
        upg::GadgetOutput out = upg::cds_from_3dm(inst);
        benchmark::DoNotOptimize(out.graph.edge_count());
    }
}
BENCHMARK(BM_gadget_build)->Arg(2)->Arg(4)->Arg(8);

void BM_cds_oracle_gadget(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    // both instances cover every element; the m=4 one has no matching
    std::vector<std::array<int, 3>> triples =
        m == 2 ? std::vector<std::array<int, 3>>{{{0, 0, 0}}, {{1, 1, 1}}}
               : std::vector<std::array<int, 3>>{
                     {{0, 0, 0}}, {{0, 1, 1}}, {{1, 0, 1}}, {{1, 1, 0}}};
    upg::ThreeDMInstance inst = upg::ThreeDMInstance::checked(2, std::move(triples));
    upg::GadgetOutput gadget = upg::cds_from_3dm(inst);
    for (auto _ : state) {
        upg::Witness w = upg::cds_min(gadget.graph, gadget.budget, 64);
        benchmark::DoNotOptimize(w.objective);
    }
}
BENCHMARK(BM_cds_oracle_gadget)->Arg(2)->Arg(4);

void BM_steiner_oracle(benchmark::State& state) {
    upg::SplitMix64 rng(11);
    int n = static_cast<int>(state.range(0));
    upg::Graph g = upg::random_connected_graph(n, 350, rng);
    upg::VertexSet x = upg::random_vertex_subset(n, n / 2, rng);
    for (auto _ : state) {
        upg::Witness w = upg::steiner_min(g, x);
        benchmark::DoNotOptimize(w.objective);
    }
}
BENCHMARK(BM_steiner_oracle)->Arg(10)->Arg(14)->Arg(18);

void BM_diam2_solver(benchmark::State& state) {
    upg::SteinerInstance inst = broom_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto [w, trace] = upg::solve(inst);
        benchmark::DoNotOptimize(w.objective);
    }
}
BENCHMARK(BM_diam2_solver)->Arg(5)->Arg(9)->Arg(13);

void BM_max_matching(benchmark::State& state) {
    upg::SplitMix64 rng(23);
    int n = static_cast<int>(state.range(0));
    upg::Graph g = upg::random_graph(n, 120, rng);
    for (auto _ : state) {
        auto matching = upg::max_matching(g);
        benchmark::DoNotOptimize(matching.size());
    }
}
BENCHMARK(BM_max_matching)->Arg(32)->Arg(64)->Arg(128);

void BM_search_model(benchmark::State& state) {
    upg::SplitMix64 rng(5);
    std::optional<upg::TreeModel> m = upg::random_connected_path_model(8, 5, rng);
    upg::Graph g = upg::realize(*m);
    for (auto _ : state) {
        std::optional<upg::TreeModel> found = upg::search_model(g, true);
        benchmark::DoNotOptimize(found.has_value());
    }
}
BENCHMARK(BM_search_model);

}  // namespace

BENCHMARK_MAIN();
