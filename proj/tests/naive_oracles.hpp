#pragma once

// Unpruned reference enumerators. These stay deliberately dumb so the
// production oracles (which prune) can be checked witness-for-witness
// against the plain lexicographic scan.

#include <functional>
#include <optional>
#include <vector>

#include "upg/graph.hpp"
#include "upg/types.hpp"

namespace naive {

// all k-subsets of [0,n) in lexicographic order
inline void for_each_subset(int n, int k, const std::function<bool(const upg::VertexSet&)>& visit) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    if (k > n) return;
    while (true) {
        std::vector<upg::Vertex> ids(idx.begin(), idx.end());
        if (visit(upg::VertexSet(ids))) return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - (k - i)) --i;
        if (i < 0) return;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

inline upg::Witness first_of_size(int n, const std::function<bool(const upg::VertexSet&)>& good) {
    for (int k = 0; k <= n; ++k) {
        upg::Witness found;
        bool done = false;
        for_each_subset(n, k, [&](const upg::VertexSet& s) {
            if (good(s)) {
                found = {true, s, k};
                done = true;
                return true;
            }
            return false;
        });
        if (done) return found;
    }
    return {false, {}, n + 1};
}

inline upg::Witness ds_min(const upg::Graph& g) {
    return first_of_size(g.vertex_count(),
                         [&](const upg::VertexSet& s) { return upg::is_dominating(g, s); });
}

inline upg::Witness cds_min(const upg::Graph& g) {
    return first_of_size(g.vertex_count(), [&](const upg::VertexSet& s) {
        return upg::is_dominating(g, s) && (s.empty() ? g.vertex_count() == 0
                                                      : upg::is_connected_induced(g, s));
    });
}

inline upg::Witness steiner_min(const upg::Graph& g, const upg::VertexSet& x) {
    const int n = g.vertex_count();
    for (int k = 0; k <= n; ++k) {
        upg::Witness found;
        bool done = false;
        for_each_subset(n, k, [&](const upg::VertexSet& s) {
            if (!upg::set_intersection(s, x).empty()) return false;
            if (upg::is_connected_induced(g, upg::set_union(s, x))) {
                found = {true, s, k};
                done = true;
                return true;
            }
            return false;
        });
        if (done) return found;
    }
    return {false, {}, n + 1};
}

inline upg::Witness dominating_clique_min(const upg::Graph& g, const upg::VertexSet& candidates,
                                          const upg::VertexSet& targets) {
    const int n = g.vertex_count();
    for (int k = 0; k <= candidates.size(); ++k) {
        upg::Witness found;
        bool done = false;
        for_each_subset(n, k, [&](const upg::VertexSet& s) {
            if (!upg::set_difference(s, candidates).empty()) return false;
            if (!upg::is_clique(g, s)) return false;
            for (upg::Vertex t : targets) {
                bool covered = s.contains(t);
                for (upg::Vertex w : g.neighbors_of(t)) covered = covered || s.contains(w);
                if (!covered) return false;
            }
            found = {true, s, k};
            done = true;
            return true;
        });
        if (done) return found;
    }
    return {false, {}, candidates.size() + 1};
}

// maximum matching by exhaustive branch over the first uncovered vertex
inline int max_matching_size(const upg::Graph& g) {
    std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
    std::function<int(int)> rec = [&](int from) -> int {
        int v = from;
        while (v < g.vertex_count() && used[static_cast<size_t>(v)]) ++v;
        if (v >= g.vertex_count()) return 0;
        int best = rec(v + 1);  // leave v unmatched
        used[static_cast<size_t>(v)] = true;
        for (upg::Vertex w : g.neighbors_of(v)) {
            if (used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(w)] = true;
            best = std::max(best, 1 + rec(v + 1));
            used[static_cast<size_t>(w)] = false;
        }
        used[static_cast<size_t>(v)] = false;
        return best;
    };
    return rec(0);
}

// minimum edge cover by subset DP over vertex masks; nullopt with an
// isolated vertex
inline std::optional<int> min_edge_cover_size(const upg::Graph& g) {
    const int n = g.vertex_count();
    for (upg::Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0) return std::nullopt;
    std::vector<int> best(static_cast<size_t>(1) << n, 1 << 20);
    best[0] = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        int v = 0;
        while (!(mask & (1 << v))) ++v;
        for (upg::Vertex w : g.neighbors_of(v)) {
            int rest = mask & ~(1 << v) & ~(1 << w);
            best[static_cast<size_t>(mask)] =
                std::min(best[static_cast<size_t>(mask)], best[static_cast<size_t>(rest)] + 1);
        }
    }
    return best[(static_cast<size_t>(1) << n) - 1];
}

}  // namespace naive
