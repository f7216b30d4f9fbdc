#include "upg/tree_model.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "upg/enumerate.hpp"

namespace upg {

namespace {

bool nodes_connected_in_host(const Graph& host, const VertexSet& nodes) {
    if (nodes.size() <= 1) return !nodes.empty();
    std::vector<bool> in(static_cast<size_t>(host.vertex_count()), false);
    for (int t : nodes) in[static_cast<size_t>(t)] = true;
    std::deque<int> queue{nodes.ids().front()};
    std::vector<bool> seen(static_cast<size_t>(host.vertex_count()), false);
    seen[static_cast<size_t>(nodes.ids().front())] = true;
    int reached = 0;
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        ++reached;
        for (int s : host.neighbors_of(t))
            if (in[static_cast<size_t>(s)] && !seen[static_cast<size_t>(s)]) {
                seen[static_cast<size_t>(s)] = true;
                queue.push_back(s);
            }
    }
    return reached == nodes.size();
}

int degree_within(const Graph& host, const VertexSet& nodes, int t) {
    int d = 0;
    for (int s : host.neighbors_of(t))
        if (nodes.contains(s)) ++d;
    return d;
}

}  // namespace

Graph realize(const TreeModel& m) {
    const int n = m.vertex_count();
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!set_intersection(m.assignment[static_cast<size_t>(u)],
                                  m.assignment[static_cast<size_t>(v)])
                     .empty())
                g.add_edge(u, v);
    return g;
}

VertexSet node_set(const TreeModel& m, int t) {
    m.host.check_vertex(t);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < m.vertex_count(); ++u)
        if (m.assignment[static_cast<size_t>(u)].contains(t)) out.push_back(u);
    return VertexSet(std::move(out));
}

bool node_set_is_subtree(const TreeModel& m, Vertex v) {
    const VertexSet& nodes = m.assignment[static_cast<size_t>(v)];
    if (nodes.empty()) return false;
    for (int t : nodes)
        if (t < 0 || t >= m.node_count()) return false;
    return nodes_connected_in_host(m.host, nodes);
}

bool node_set_is_path(const TreeModel& m, Vertex v) {
    if (!node_set_is_subtree(m, v)) return false;
    for (int t : m.assignment[static_cast<size_t>(v)])
        if (degree_within(m.host, m.assignment[static_cast<size_t>(v)], t) > 2) return false;
    return true;
}

VerificationReport validate(const TreeModel& m, const Graph& g, bool require_paths) {
    if (m.vertex_count() != g.vertex_count())
        throw instance_error("validate: model covers " + std::to_string(m.vertex_count()) +
                             " vertices, graph has " + std::to_string(g.vertex_count()));
    VerificationReport report;
    report.add("host_is_tree", is_tree(m.host));

    bool subtrees_ok = true;
    std::string subtree_detail;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!node_set_is_subtree(m, v)) {
            subtrees_ok = false;
            subtree_detail = "vertex " + std::to_string(v);
            break;
        }
    }
    report.add("node_sets_are_subtrees", subtrees_ok, subtree_detail);

    if (require_paths) {
        bool paths_ok = true;
        std::string path_detail;
        for (Vertex v = 0; v < g.vertex_count() && subtrees_ok; ++v) {
            if (!node_set_is_path(m, v)) {
                paths_ok = false;
                path_detail = "vertex " + std::to_string(v);
                break;
            }
        }
        report.add("node_sets_are_paths", subtrees_ok && paths_ok, path_detail);
    }

    // intersection law, both directions, every pair
    bool law_ok = true;
    std::string law_detail;
    for (Vertex u = 0; u < g.vertex_count() && law_ok; ++u) {
        for (Vertex v = u + 1; v < g.vertex_count() && law_ok; ++v) {
            bool meet = !set_intersection(m.assignment[static_cast<size_t>(u)],
                                          m.assignment[static_cast<size_t>(v)])
                             .empty();
            if (meet != g.has_edge(u, v)) {
                law_ok = false;
                law_detail = "pair " + std::to_string(u) + "," + std::to_string(v) +
                             (meet ? " intersects without edge" : " has edge without intersection");
            }
        }
    }
    report.add("realizes_graph", law_ok, law_detail);
    return report;
}

namespace {

// Merge host node s into adjacent node t. Every node set containing s also
// contains t (that is the contraction precondition), so dropping s keeps
// subtrees connected and paths paths.
TreeModel contract(const TreeModel& m, int s, int t) {
    const int nodes = m.node_count();
    std::vector<int> fresh(static_cast<size_t>(nodes));
    for (int i = 0; i < nodes; ++i) fresh[static_cast<size_t>(i)] = i < s ? i : i - 1;
    TreeModel out;
    out.host = Graph(nodes - 1);
    for (const auto& [a, b] : m.host.edges()) {
        int a2 = a == s ? t : a;
        int b2 = b == s ? t : b;
        if (a2 == b2) continue;
        int x = fresh[static_cast<size_t>(a2)], y = fresh[static_cast<size_t>(b2)];
        if (!out.host.has_edge(x, y)) out.host.add_edge(x, y);
    }
    out.assignment.reserve(m.assignment.size());
    for (const VertexSet& nodes_of_v : m.assignment) {
        std::vector<int> mapped;
        for (int x : nodes_of_v)
            if (x != s) mapped.push_back(fresh[static_cast<size_t>(x)]);
        out.assignment.emplace_back(std::move(mapped));
    }
    return out;
}

}  // namespace

TreeModel make_minimal(const TreeModel& m) {
    {
        VerificationReport ok = validate(m, realize(m), false);
        if (!ok.pass()) throw instance_error("make_minimal: invalid input model");
    }
    Graph target = realize(m);
    TreeModel cur = m;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : cur.host.edges()) {
            VertexSet va = node_set(cur, a);
            VertexSet vb = node_set(cur, b);
            int s = -1, t = -1;
            if (set_difference(va, vb).empty()) {
                s = a;
                t = b;
            } else if (set_difference(vb, va).empty()) {
                s = b;
                t = a;
            }
            if (s >= 0) {
                cur = contract(cur, s, t);
                VerificationReport check = validate(cur, target, false);
                if (!check.pass())
                    throw integrity_error("make_minimal: contraction broke the model");
                changed = true;
                break;
            }
        }
    }
    return cur;
}

bool is_minimal(const TreeModel& m) {
    for (const auto& [a, b] : m.host.edges()) {
        VertexSet va = node_set(m, a);
        VertexSet vb = node_set(m, b);
        if (set_difference(va, vb).empty() || set_difference(vb, va).empty()) return false;
    }
    return true;
}

std::vector<int> host_leaves(const TreeModel& m) {
    std::vector<int> out;
    if (m.node_count() <= 1) return out;  // a lone node is not a leaf
    for (int t = 0; t < m.node_count(); ++t)
        if (m.host.degree(t) == 1) out.push_back(t);
    return out;
}

LeafyReport leafy_vertices(const TreeModel& m) {
    LeafyReport report;
    std::vector<int> leaves = host_leaves(m);
    std::vector<bool> is_leaf(static_cast<size_t>(m.node_count()), false);
    for (int t : leaves) is_leaf[static_cast<size_t>(t)] = true;
    for (Vertex v = 0; v < m.vertex_count(); ++v) {
        const VertexSet& nodes = m.assignment[static_cast<size_t>(v)];
        if (nodes.size() == 1 && is_leaf[static_cast<size_t>(nodes.ids().front())]) {
            report.leafy.insert(v);
            report.leaf_of.emplace_back(v, nodes.ids().front());
        }
    }
    return report;
}

namespace {

// Candidate node sets of a host tree: all paths, or all subtrees.
std::vector<VertexSet> host_candidates(const Graph& host, bool paths_only) {
    const int t = host.vertex_count();
    std::vector<VertexSet> out;
    if (paths_only) {
        for (int a = 0; a < t; ++a) out.push_back(VertexSet{a});
        for (int a = 0; a < t; ++a) {
            std::vector<int> parent(static_cast<size_t>(t), -1);
            std::vector<int> dist = bfs_distances(host, a);
            // rebuild parents deterministically
            std::vector<int> order(static_cast<size_t>(t));
            for (int i = 0; i < t; ++i) order[static_cast<size_t>(i)] = i;
            std::sort(order.begin(), order.end(), [&](int x, int y) {
                return dist[static_cast<size_t>(x)] < dist[static_cast<size_t>(y)] || (dist[static_cast<size_t>(x)] == dist[static_cast<size_t>(y)] && x < y);
            });
            for (int v : order) {
                if (v == a) continue;
                for (int w : host.neighbors_of(v))
                    if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(v)] - 1) {
                        parent[static_cast<size_t>(v)] = w;
                        break;
                    }
            }
            for (int b = a + 1; b < t; ++b) {
                std::vector<int> nodes{b};
                int cur = b;
                while (cur != a) {
                    cur = parent[static_cast<size_t>(cur)];
                    nodes.push_back(cur);
                }
                out.emplace_back(std::move(nodes));
            }
        }
    } else {
        for (int mask = 1; mask < (1 << t); ++mask) {
            std::vector<int> nodes;
            for (int b = 0; b < t; ++b)
                if (mask & (1 << b)) nodes.push_back(b);
            VertexSet set(std::move(nodes));
            bool conn = set.size() <= 1 || nodes_connected_in_host(host, set);
            if (conn) out.push_back(std::move(set));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool assign_paths(const Graph& g, const std::vector<VertexSet>& candidates,
                  std::vector<VertexSet>& assignment) {
    const int n = g.vertex_count();
    // assignment order: highest degree first, then grow through the
    // neighborhood so every step is constrained
    std::vector<Vertex> order;
    std::vector<bool> placed(static_cast<size_t>(n), false);
    while (static_cast<int>(order.size()) < n) {
        Vertex best = -1;
        int best_key = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[static_cast<size_t>(v)]) continue;
            int attached = 0;
            for (Vertex w : g.neighbors_of(v))
                if (placed[static_cast<size_t>(w)]) ++attached;
            int key = attached * 100 + g.degree(v);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        placed[static_cast<size_t>(best)] = true;
        order.push_back(best);
    }

    std::vector<int> chosen(static_cast<size_t>(n), -1);
    std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
        if (depth == order.size()) return true;
        Vertex u = order[depth];
        for (size_t ci = 0; ci < candidates.size(); ++ci) {
            const VertexSet& cand = candidates[ci];
            bool ok = true;
            for (size_t prev = 0; prev < depth && ok; ++prev) {
                Vertex w = order[prev];
                bool meet = !set_intersection(cand, candidates[static_cast<size_t>(
                                                        chosen[static_cast<size_t>(w)])])
                                 .empty();
                if (meet != g.has_edge(u, w)) ok = false;
            }
            if (!ok) continue;
            chosen[static_cast<size_t>(u)] = static_cast<int>(ci);
            if (rec(depth + 1)) return true;
            chosen[static_cast<size_t>(u)] = -1;
        }
        return false;
    };
    if (!rec(0)) return false;
    assignment.assign(static_cast<size_t>(n), VertexSet{});
    for (Vertex v = 0; v < n; ++v)
        assignment[static_cast<size_t>(v)] = candidates[static_cast<size_t>(chosen[static_cast<size_t>(v)])];
    return true;
}

}  // namespace

std::optional<TreeModel> search_model(const Graph& g, bool require_paths, int node_budget,
                                      int size_cap) {
    const int n = g.vertex_count();
    if (n > size_cap)
        throw size_error("search_model: graph has " + std::to_string(n) +
                         " vertices, cap is " + std::to_string(size_cap));
    if (n == 0) {
        TreeModel m;
        m.host = Graph(1);
        return m;
    }
    if (!is_chordal(g)) return std::nullopt;
    int budget = node_budget > 0 ? node_budget
                                 : std::max<int>(1, static_cast<int>(maximal_cliques(g).size()));
    for (int t = 1; t <= budget; ++t) {
        for (const Graph& host : trees_with(t)) {
            std::vector<VertexSet> candidates = host_candidates(host, require_paths);
            std::vector<VertexSet> assignment;
            if (assign_paths(g, candidates, assignment)) {
                TreeModel m{host, std::move(assignment)};
                VerificationReport check = validate(m, g, require_paths);
                if (!check.pass()) throw integrity_error("search_model: produced invalid model");
                return m;
            }
        }
    }
    return std::nullopt;
}

}  // namespace upg
