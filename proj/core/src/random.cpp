#include "upg/random.hpp"

#include <algorithm>
#include <set>

namespace upg {

Graph random_graph(int n, int edge_permille, SplitMix64& rng) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.permille(edge_permille)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, int edge_permille, SplitMix64& rng, int attempts) {
    for (int i = 0; i < attempts; ++i) {
        Graph g = random_graph(n, edge_permille, rng);
        if (is_connected(g)) return g;
    }
    Graph g = random_graph(n, edge_permille, rng);
    for (Vertex v = 0; v + 1 < n; ++v)
        if (!g.has_edge(v, v + 1)) g.add_edge(v, v + 1);
    return g;
}

ThreeDMInstance random_3dm(int n, int m, SplitMix64& rng) {
    const long grid = static_cast<long>(n) * n * n;
    if (m > grid) throw instance_error("random_3dm: more triples than the grid holds");
    std::set<std::array<int, 3>> chosen;
    while (static_cast<int>(chosen.size()) < m) {
        std::array<int, 3> t{rng.below_int(n), rng.below_int(n), rng.below_int(n)};
        chosen.insert(t);
    }
    return ThreeDMInstance::checked(n, {chosen.begin(), chosen.end()});
}

Graph random_tree(int nodes, SplitMix64& rng) {
    Graph t(nodes);
    for (int v = 1; v < nodes; ++v) t.add_edge(rng.below_int(v), v);
    return t;
}

namespace {

VertexSet host_path(const Graph& host, int a, int b) {
    if (a == b) return VertexSet{a};
    std::vector<int> dist = bfs_distances(host, a);
    std::vector<int> nodes{b};
    int cur = b;
    while (cur != a) {
        for (int w : host.neighbors_of(cur))
            if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(cur)] - 1) {
                cur = w;
                break;
            }
        nodes.push_back(cur);
    }
    return VertexSet(std::move(nodes));
}

TreeModel model_over_host(Graph host, int vertices, SplitMix64& rng) {
    TreeModel m;
    const int nodes = host.vertex_count();
    m.host = std::move(host);
    m.assignment.reserve(static_cast<size_t>(vertices));
    for (int v = 0; v < vertices; ++v) {
        int a = rng.below_int(nodes);
        int b = rng.below_int(nodes);
        m.assignment.push_back(host_path(m.host, a, b));
    }
    return m;
}

}  // namespace

TreeModel random_path_model(int vertices, int host_nodes, SplitMix64& rng) {
    return model_over_host(random_tree(host_nodes, rng), vertices, rng);
}

TreeModel random_interval_model(int vertices, int host_nodes, SplitMix64& rng) {
    Graph path(host_nodes);
    for (int v = 0; v + 1 < host_nodes; ++v) path.add_edge(v, v + 1);
    return model_over_host(std::move(path), vertices, rng);
}

std::optional<TreeModel> random_connected_path_model(int vertices, int host_nodes,
                                                     SplitMix64& rng, int attempts) {
    for (int i = 0; i < attempts; ++i) {
        TreeModel m = random_path_model(vertices, host_nodes, rng);
        if (is_connected(realize(m))) return m;
    }
    return std::nullopt;
}

std::optional<TreeModel> random_distinct_path_model(int vertices, int host_nodes,
                                                    SplitMix64& rng, int attempts) {
    for (int i = 0; i < attempts; ++i) {
        Graph host = random_tree(host_nodes, rng);
        std::vector<VertexSet> pool;
        for (int a = 0; a < host_nodes; ++a)
            for (int b = a; b < host_nodes; ++b) pool.push_back(host_path(host, a, b));
        if (static_cast<int>(pool.size()) < vertices) return std::nullopt;
        for (int j = static_cast<int>(pool.size()) - 1; j > 0; --j)
            std::swap(pool[static_cast<size_t>(j)],
                      pool[static_cast<size_t>(rng.below_int(j + 1))]);
        TreeModel m;
        m.host = std::move(host);
        m.assignment.assign(pool.begin(), pool.begin() + vertices);
        if (is_connected(realize(m))) return m;
    }
    return std::nullopt;
}

VertexSet random_vertex_subset(int n, int size, SplitMix64& rng) {
    if (size > n) throw instance_error("random_vertex_subset: size exceeds n");
    std::vector<Vertex> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
    // Fisher-Yates prefix
    for (int i = 0; i < size; ++i) {
        int j = i + rng.below_int(n - i);
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    pool.resize(static_cast<size_t>(size));
    return VertexSet(std::move(pool));
}

}  // namespace upg
