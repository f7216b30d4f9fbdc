#include "upg/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace upg {

namespace {

// Iterated neighborhood refinement. Returns vertex groups ordered by an
// isomorphism-invariant signature; any canonical labeling must list group 0
// first, then group 1, and so on.
std::vector<std::vector<Vertex>> refine_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) color[static_cast<size_t>(v)] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::pair<std::vector<int>, Vertex>> sig;
        sig.reserve(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<size_t>(v)]};
            std::vector<int> nb;
            for (Vertex w : g.neighbors_of(v)) nb.push_back(color[static_cast<size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig.emplace_back(std::move(s), v);
        }
        std::vector<std::pair<std::vector<int>, Vertex>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::map<std::vector<int>, int> id;
        for (const auto& [s, v] : sorted)
            if (!id.count(s)) {
                int next = static_cast<int>(id.size());
                id[s] = next;
            }
        std::vector<int> fresh(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) fresh[static_cast<size_t>(v)] = id[sig[static_cast<size_t>(v)].first];
        int fresh_classes = static_cast<int>(id.size());
        color = std::move(fresh);
        if (fresh_classes == classes) break;
        classes = fresh_classes;
    }
    std::vector<std::vector<Vertex>> groups(static_cast<size_t>(classes));
    for (Vertex v = 0; v < n; ++v) groups[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
    return groups;
}

uint64_t code_under(const Graph& g, const std::vector<Vertex>& order) {
    uint64_t code = 0;
    int bit = 0;
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]))
                code |= uint64_t{1} << bit;
    return code;
}

std::string rooted_code(const Graph& tree, Vertex v, Vertex parent) {
    std::vector<std::string> child;
    for (Vertex w : tree.neighbors_of(v))
        if (w != parent) child.push_back(rooted_code(tree, w, v));
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const std::string& c : child) out += c;
    out += ")";
    return out;
}

std::vector<Vertex> tree_centers(const Graph& tree) {
    const int n = tree.vertex_count();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = tree.degree(v);
        if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<Vertex> next;
        remaining -= static_cast<int>(layer.size());
        for (Vertex v : layer)
            for (Vertex w : tree.neighbors_of(v))
                if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 11) throw size_error("canonical_code: needs n <= 11");
    if (n <= 1) return 0;
    std::vector<std::vector<Vertex>> groups = refine_partition(g);
    for (auto& grp : groups) std::sort(grp.begin(), grp.end());

    uint64_t best = 0;
    std::vector<Vertex> order;
    order.reserve(static_cast<size_t>(n));
    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == groups.size()) {
            best = std::max(best, code_under(g, order));
            return;
        }
        std::vector<Vertex> perm = groups[gi];
        do {
            order.insert(order.end(), perm.begin(), perm.end());
            rec(gi + 1);
            order.resize(order.size() - perm.size());
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0);
    return best;
}

std::string tree_code(const Graph& tree) {
    if (!is_tree(tree)) throw instance_error("tree_code: not a tree");
    std::string best;
    for (Vertex c : tree_centers(tree)) {
        std::string code = rooted_code(tree, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1) return {};
    if (n > 9) throw size_error("connected_graphs: desk-scale cap is 9");
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        // every connected graph on k+1 vertices arises by attaching a new
        // vertex (with a nonempty neighborhood) to a connected k-vertex graph
        std::unordered_set<uint64_t> seen;
        std::vector<std::pair<uint64_t, Graph>> next;
        for (const Graph& g : level) {
            for (int mask = 1; mask < (1 << k); ++mask) {
                Graph h(k + 1);
                for (const auto& [u, v] : g.edges()) h.add_edge(u, v);
                for (int b = 0; b < k; ++b)
                    if (mask & (1 << b)) h.add_edge(b, k);
                uint64_t code = canonical_code(h);
                if (seen.insert(code).second) next.emplace_back(code, std::move(h));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        level.reserve(next.size());
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    return level;
}

std::vector<Graph> trees_with(int n) {
    if (n < 1) return {};
    std::vector<Graph> level{Graph(1)};
    for (int k = 1; k < n; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> next;
        for (const Graph& t : level) {
            for (Vertex v = 0; v < k; ++v) {
                Graph h(k + 1);
                for (const auto& [a, b] : t.edges()) h.add_edge(a, b);
                h.add_edge(v, k);
                std::string code = tree_code(h);
                if (seen.insert(code).second) next.emplace_back(std::move(code), std::move(h));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        level.reserve(next.size());
        for (auto& [code, t] : next) level.push_back(std::move(t));
    }
    return level;
}

}  // namespace upg
