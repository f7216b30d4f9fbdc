#include "upg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

namespace upg {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw instance_error("graph: negative vertex count");
    adj_.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    nbr_.assign(static_cast<size_t>(n), {});
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw instance_error("graph: self-loop at vertex " + std::to_string(u));
    if (adj_[static_cast<size_t>(u)][static_cast<size_t>(v)])
        throw instance_error("graph: duplicate edge " + std::to_string(u) + " " +
                             std::to_string(v));
    adj_[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
    adj_[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
    auto& nu = nbr_[static_cast<size_t>(u)];
    auto& nv = nbr_[static_cast<size_t>(v)];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<size_t>(u)][static_cast<size_t>(v)];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(nbr_[static_cast<size_t>(v)].size());
}

const std::vector<Vertex>& Graph::neighbors_of(Vertex v) const {
    check_vertex(v);
    return nbr_[static_cast<size_t>(v)];
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : nbr_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

VertexSet neighbors(const Graph& g, Vertex v, bool closed) {
    g.check_vertex(v);
    std::vector<Vertex> ids = g.neighbors_of(v);
    if (closed) ids.push_back(v);
    return VertexSet(std::move(ids));
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    for (Vertex v : d) g.check_vertex(v);
    std::vector<bool> hit(static_cast<size_t>(g.vertex_count()), false);
    for (Vertex v : d) {
        hit[static_cast<size_t>(v)] = true;
        for (Vertex w : g.neighbors_of(v)) hit[static_cast<size_t>(w)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_connected_induced(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) g.check_vertex(v);
    if (s.size() <= 1) return true;
    std::vector<bool> in(static_cast<size_t>(g.vertex_count()), false);
    for (Vertex v : s) in[static_cast<size_t>(v)] = true;
    std::deque<Vertex> queue{s.ids().front()};
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    seen[static_cast<size_t>(s.ids().front())] = true;
    int reached = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        ++reached;
        for (Vertex w : g.neighbors_of(v)) {
            if (in[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                queue.push_back(w);
            }
        }
    }
    return reached == s.size();
}

bool is_connected(const Graph& g) {
    return is_connected_induced(g, VertexSet::full(g.vertex_count()));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> queue{s};
        seen[static_cast<size_t>(s)] = true;
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (Vertex w : g.neighbors_of(v)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    g.check_vertex(src);
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    dist[static_cast<size_t>(src)] = 0;
    std::deque<Vertex> queue{src};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors_of(v)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<int> diameter(const Graph& g) {
    if (g.vertex_count() <= 1) return 0;
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

std::vector<TwinPair> twins(const Graph& g) {
    std::vector<TwinPair> out;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) {
                // closed neighborhoods agree iff open ones match off {u,v}
                VertexSet nu = neighbors(g, u, true);
                VertexSet nv = neighbors(g, v, true);
                if (nu == nv) out.push_back({u, v, true});
            } else {
                if (g.neighbors_of(u) == g.neighbors_of(v)) out.push_back({u, v, false});
            }
        }
    }
    return out;
}

VertexSet simplicial_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors_of(v);
        bool ok = true;
        for (size_t i = 0; i < nb.size() && ok; ++i)
            for (size_t j = i + 1; j < nb.size() && ok; ++j)
                if (!g.has_edge(nb[i], nb[j])) ok = false;
        if (ok) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

bool is_clique(const Graph& g, const VertexSet& s) {
    const auto& ids = s.ids();
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = i + 1; j < ids.size(); ++j)
            if (!g.has_edge(ids[i], ids[j])) return false;
    return true;
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (color[static_cast<size_t>(s)] >= 0) continue;
        color[static_cast<size_t>(s)] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors_of(v)) {
                if (color[static_cast<size_t>(w)] < 0) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    queue.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        (color[static_cast<size_t>(v)] == 0 ? a : b).push_back(v);
    return std::make_pair(VertexSet(std::move(a)), VertexSet(std::move(b)));
}

std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g, const VertexSet& keep) {
    for (Vertex v : keep) g.check_vertex(v);
    std::vector<Vertex> old_ids(keep.begin(), keep.end());
    std::vector<int> new_id(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < old_ids.size(); ++i) new_id[static_cast<size_t>(old_ids[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(old_ids.size()));
    for (size_t i = 0; i < old_ids.size(); ++i) {
        for (Vertex w : g.neighbors_of(old_ids[i])) {
            int j = new_id[static_cast<size_t>(w)];
            if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
        }
    }
    return {std::move(h), std::move(old_ids)};
}

std::pair<Graph, std::vector<Vertex>> remove_vertex(const Graph& g, Vertex v) {
    g.check_vertex(v);
    VertexSet keep = VertexSet::full(g.vertex_count());
    keep.erase(v);
    return induced_subgraph(g, keep);
}

bool is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 2) return true;
    // maximum cardinality search, then verify the elimination ordering
    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<bool> numbered(static_cast<size_t>(n), false);
    std::vector<Vertex> order;  // reverse elimination order
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!numbered[static_cast<size_t>(v)] &&
                (best < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(best)]))
                best = v;
        numbered[static_cast<size_t>(best)] = true;
        order.push_back(best);
        for (Vertex w : g.neighbors_of(best))
            if (!numbered[static_cast<size_t>(w)]) ++weight[static_cast<size_t>(w)];
    }
    std::vector<int> pos(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    for (Vertex v = 0; v < n; ++v) {
        // later-ordered neighbors of v must be pairwise adjacent through the
        // earliest of them
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors_of(v))
            if (pos[static_cast<size_t>(w)] < pos[static_cast<size_t>(v)]) later.push_back(w);
        if (later.empty()) continue;
        Vertex pivot = *std::max_element(later.begin(), later.end(), [&](Vertex a, Vertex b) {
            return pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(b)];
        });
        for (Vertex w : later)
            if (w != pivot && !g.has_edge(pivot, w)) return false;
    }
    return true;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<Vertex> r;
    std::function<void(std::vector<Vertex>, std::vector<Vertex>)> expand =
        [&](std::vector<Vertex> p, std::vector<Vertex> x) {
            if (p.empty() && x.empty()) {
                out.emplace_back(r);
                return;
            }
            // pivot on the candidate with most neighbors in p
            Vertex pivot = -1;
            int best = -1;
            for (Vertex v : p) {
                int c = 0;
                for (Vertex w : p)
                    if (g.has_edge(v, w)) ++c;
                if (c > best) best = c, pivot = v;
            }
            for (Vertex v : x) {
                int c = 0;
                for (Vertex w : p)
                    if (g.has_edge(v, w)) ++c;
                if (c > best) best = c, pivot = v;
            }
            std::vector<Vertex> branch;
            for (Vertex v : p)
                if (pivot < 0 || !g.has_edge(pivot, v)) branch.push_back(v);
            for (Vertex v : branch) {
                std::vector<Vertex> p2, x2;
                for (Vertex w : p)
                    if (g.has_edge(v, w)) p2.push_back(w);
                for (Vertex w : x)
                    if (g.has_edge(v, w)) x2.push_back(w);
                r.push_back(v);
                expand(std::move(p2), std::move(x2));
                r.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
            }
        };
    std::vector<Vertex> all(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) all[static_cast<size_t>(i)] = i;
    expand(std::move(all), {});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace upg
