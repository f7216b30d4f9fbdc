#include "upg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

namespace upg {

namespace {

struct MaskGraph {
    int n = 0;
    std::vector<uint64_t> open, closed;
    uint64_t all = 0;

    static MaskGraph of(const Graph& g, int size_cap, const char* who) {
        const int n = g.vertex_count();
        if (n > size_cap || n > 64)
            throw size_error(std::string(who) + ": graph has " + std::to_string(n) +
                             " vertices, enumeration cap is " +
                             std::to_string(std::min(size_cap, 64)));
        MaskGraph mg;
        mg.n = n;
        mg.open.assign(static_cast<size_t>(n), 0);
        mg.closed.assign(static_cast<size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v) {
            uint64_t bits = 0;
            for (Vertex w : g.neighbors_of(v)) bits |= uint64_t{1} << w;
            mg.open[static_cast<size_t>(v)] = bits;
            mg.closed[static_cast<size_t>(v)] = bits | (uint64_t{1} << v);
        }
        mg.all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        return mg;
    }
};

uint64_t mask_of(const VertexSet& s) {
    uint64_t bits = 0;
    for (Vertex v : s) bits |= uint64_t{1} << v;
    return bits;
}

VertexSet set_of(uint64_t mask) {
    std::vector<Vertex> ids;
    while (mask) {
        int v = std::countr_zero(mask);
        ids.push_back(v);
        mask &= mask - 1;
    }
    return VertexSet(std::move(ids));
}

// Vertices reachable from src inside `allowed`.
uint64_t mask_closure(const MaskGraph& mg, int src, uint64_t allowed) {
    uint64_t reach = (uint64_t{1} << src) & allowed;
    uint64_t frontier = reach;
    while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= mg.open[static_cast<size_t>(v)];
        }
        next &= allowed & ~reach;
        reach |= next;
        frontier = next;
    }
    return reach;
}

bool mask_connected(const MaskGraph& mg, uint64_t set) {
    if (set == 0) return true;
    int src = std::countr_zero(set);
    return (set & ~mask_closure(mg, src, set)) == 0;
}

// Undominated vertices with pairwise disjoint closed neighborhoods each need
// a distinct future pick; the greedy count is a sound lower bound.
int packing_bound(const MaskGraph& mg, uint64_t undominated) {
    uint64_t used = 0;
    int count = 0;
    uint64_t u = undominated;
    while (u) {
        int v = std::countr_zero(u);
        u &= u - 1;
        if (mg.closed[static_cast<size_t>(v)] & used) continue;
        used |= mg.closed[static_cast<size_t>(v)];
        ++count;
    }
    return count;
}

uint64_t suffix_mask(const MaskGraph& mg, int pos) {
    if (pos >= mg.n) return 0;
    return mg.all & ~((uint64_t{1} << pos) - 1);
}

// Lexicographic DFS for a k-subset dominating everything (and connected when
// asked). Returns the first witness found.
bool dominating_dfs(const MaskGraph& mg, int k, bool need_connected, int pos, int chosen_count,
                    uint64_t chosen, uint64_t dominated, uint64_t& out) {
    if (chosen_count == k) {
        if (dominated != mg.all) return false;
        if (need_connected && !mask_connected(mg, chosen)) return false;
        out = chosen;
        return true;
    }
    const int remaining = k - chosen_count;
    const uint64_t avail = suffix_mask(mg, pos);
    if (std::popcount(avail) < remaining) return false;

    uint64_t undom = mg.all & ~dominated;
    uint64_t u = undom;
    while (u) {
        int v = std::countr_zero(u);
        u &= u - 1;
        if ((mg.closed[static_cast<size_t>(v)] & avail) == 0) return false;
    }
    if (packing_bound(mg, undom) > remaining) return false;
    if (need_connected && chosen) {
        int src = std::countr_zero(chosen);
        uint64_t reach = mask_closure(mg, src, chosen | avail);
        if (chosen & ~reach) return false;
    }
    for (int v = pos; v < mg.n; ++v) {
        if (mg.n - v < remaining) break;
        if (dominating_dfs(mg, k, need_connected, v + 1, chosen_count + 1,
                           chosen | (uint64_t{1} << v),
                           dominated | mg.closed[static_cast<size_t>(v)], out))
            return true;
    }
    return false;
}

Witness dominating_search(const Graph& g, bool need_connected, std::optional<int> budget,
                          int size_cap, const char* who) {
    MaskGraph mg = MaskGraph::of(g, size_cap, who);
    if (mg.n == 0) return {true, {}, 0};
    int limit = budget ? std::min(*budget, mg.n) : mg.n;
    int start = packing_bound(mg, mg.all);
    for (int k = std::min(start, limit); k <= limit; ++k) {
        uint64_t found = 0;
        if (dominating_dfs(mg, k, need_connected, 0, 0, 0, 0, found)) {
            VertexSet set = set_of(found);
            if (!is_dominating(g, set) ||
                (need_connected && !is_connected_induced(g, set)))
                throw integrity_error(std::string(who) + ": witness failed re-verification");
            return {true, set, k};
        }
    }
    return {false, {}, limit + 1};
}

}  // namespace

Witness ds_min(const Graph& g, std::optional<int> budget, int size_cap) {
    return dominating_search(g, false, budget, size_cap, "ds_min");
}

Witness cds_min(const Graph& g, std::optional<int> budget, int size_cap) {
    if (!is_connected(g)) throw instance_error("cds_min: graph is disconnected");
    return dominating_search(g, true, budget, size_cap, "cds_min");
}

namespace {

bool steiner_dfs(const MaskGraph& mg, const std::vector<int>& cands, uint64_t xmask, int k,
                 size_t pos, int chosen_count, uint64_t chosen, uint64_t& out) {
    if (chosen_count == k) {
        if (!mask_connected(mg, xmask | chosen)) return false;
        out = chosen;
        return true;
    }
    const int remaining = k - chosen_count;
    if (static_cast<int>(cands.size() - pos) < remaining) return false;
    uint64_t avail = 0;
    for (size_t i = pos; i < cands.size(); ++i) avail |= uint64_t{1} << cands[i];
    // every terminal and every chosen vertex must still be reachable using
    // whatever candidates remain
    int src = std::countr_zero(xmask);
    uint64_t reach = mask_closure(mg, src, xmask | chosen | avail);
    if ((xmask | chosen) & ~reach) return false;
    for (size_t i = pos; i < cands.size(); ++i) {
        if (steiner_dfs(mg, cands, xmask, k, i + 1, chosen_count + 1,
                        chosen | (uint64_t{1} << cands[i]), out))
            return true;
    }
    return false;
}

}  // namespace

Witness steiner_min(const Graph& g, const VertexSet& x, std::optional<int> budget, int size_cap) {
    if (x.empty()) throw instance_error("steiner_min: empty terminal set");
    for (Vertex v : x) g.check_vertex(v);
    if (!is_connected(g)) throw instance_error("steiner_min: graph is disconnected");
    MaskGraph mg = MaskGraph::of(g, size_cap, "steiner_min");
    if (is_connected_induced(g, x)) return {true, {}, 0};
    uint64_t xmask = mask_of(x);
    std::vector<int> cands;
    for (Vertex v = 0; v < mg.n; ++v)
        if (!x.contains(v)) cands.push_back(v);
    int limit = budget ? std::min<int>(*budget, static_cast<int>(cands.size()))
                       : static_cast<int>(cands.size());
    for (int k = 1; k <= limit; ++k) {
        uint64_t found = 0;
        if (steiner_dfs(mg, cands, xmask, k, 0, 0, 0, found)) {
            VertexSet set = set_of(found);
            if (!is_connected_induced(g, set_union(set, x)) || !set_intersection(set, x).empty())
                throw integrity_error("steiner_min: witness failed re-verification");
            return {true, set, k};
        }
    }
    return {false, {}, limit + 1};
}

namespace {

bool clique_dom_dfs(const MaskGraph& mg, const std::vector<int>& cands, uint64_t targets, int k,
                    size_t pos, int chosen_count, uint64_t chosen, uint64_t allowed,
                    uint64_t dominated, uint64_t& out) {
    if (chosen_count == k) {
        if (targets & ~dominated) return false;
        out = chosen;
        return true;
    }
    const int remaining = k - chosen_count;
    uint64_t avail = 0;
    for (size_t i = pos; i < cands.size(); ++i) avail |= uint64_t{1} << cands[i];
    avail &= allowed;
    if (std::popcount(avail) < remaining) return false;
    uint64_t undom = targets & ~dominated;
    uint64_t u = undom;
    while (u) {
        int t = std::countr_zero(u);
        u &= u - 1;
        if ((mg.closed[static_cast<size_t>(t)] & avail) == 0) return false;
    }
    for (size_t i = pos; i < cands.size(); ++i) {
        uint64_t bit = uint64_t{1} << cands[i];
        if (!(allowed & bit)) continue;
        if (clique_dom_dfs(mg, cands, targets, k, i + 1, chosen_count + 1, chosen | bit,
                           allowed & mg.open[static_cast<size_t>(cands[i])],
                           dominated | mg.closed[static_cast<size_t>(cands[i])], out))
            return true;
    }
    return false;
}

}  // namespace

Witness dominating_clique_min(const Graph& g, const VertexSet& candidates,
                              const VertexSet& targets, std::optional<int> budget, int size_cap) {
    for (Vertex v : candidates) g.check_vertex(v);
    for (Vertex v : targets) g.check_vertex(v);
    MaskGraph mg = MaskGraph::of(g, size_cap, "dominating_clique_min");
    uint64_t target_mask = mask_of(targets);
    if (target_mask == 0) return {true, {}, 0};
    std::vector<int> cands(candidates.begin(), candidates.end());
    int limit = budget ? std::min<int>(*budget, static_cast<int>(cands.size()))
                       : static_cast<int>(cands.size());
    for (int k = 1; k <= limit; ++k) {
        uint64_t found = 0;
        if (clique_dom_dfs(mg, cands, target_mask, k, 0, 0, 0, mg.all, 0, found)) {
            VertexSet set = set_of(found);
            bool dominates = true;
            uint64_t covered = 0;
            for (Vertex v : set) covered |= mg.closed[static_cast<size_t>(v)];
            if (target_mask & ~covered) dominates = false;
            if (!is_clique(g, set) || !dominates)
                throw integrity_error("dominating_clique_min: witness failed re-verification");
            return {true, set, k};
        }
    }
    return {false, {}, limit + 1};
}

ThreeDMInstance ThreeDMInstance::checked(int n, std::vector<std::array<int, 3>> triples) {
    if (n < 1) throw instance_error("3dm: universe size must be positive");
    if (triples.empty()) throw instance_error("3dm: at least one triple required");
    for (const auto& t : triples)
        for (int coord : t)
            if (coord < 0 || coord >= n)
                throw instance_error("3dm: triple index " + std::to_string(coord) +
                                     " out of range [0," + std::to_string(n) + ")");
    std::sort(triples.begin(), triples.end());
    if (std::adjacent_find(triples.begin(), triples.end()) != triples.end())
        throw instance_error("3dm: duplicate triple");
    ThreeDMInstance inst;
    inst.n = n;
    inst.triples = std::move(triples);
    return inst;
}

Witness three_dm(const ThreeDMInstance& inst) {
    ThreeDMInstance checked = ThreeDMInstance::checked(inst.n, inst.triples);
    const int n = checked.n;
    const int m = checked.m();
    if (m < n) return {false, {}, n};
    std::vector<bool> used_p(static_cast<size_t>(n)), used_q(static_cast<size_t>(n)),
        used_r(static_cast<size_t>(n));
    std::vector<Vertex> chosen;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(chosen.size()) == n) return true;
        const int need = n - static_cast<int>(chosen.size());
        for (int j = from; j <= m - need; ++j) {
            const auto& t = checked.triples[static_cast<size_t>(j)];
            if (used_p[static_cast<size_t>(t[0])] || used_q[static_cast<size_t>(t[1])] ||
                used_r[static_cast<size_t>(t[2])])
                continue;
            used_p[static_cast<size_t>(t[0])] = used_q[static_cast<size_t>(t[1])] =
                used_r[static_cast<size_t>(t[2])] = true;
            chosen.push_back(j);
            if (rec(j + 1)) return true;
            chosen.pop_back();
            used_p[static_cast<size_t>(t[0])] = used_q[static_cast<size_t>(t[1])] =
                used_r[static_cast<size_t>(t[2])] = false;
        }
        return false;
    };
    if (rec(0)) return {true, VertexSet(chosen), n};
    return {false, {}, n};
}

bool isomorphic(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (n == 0) return true;

    auto profile = [](const Graph& g, Vertex v) {
        std::vector<int> nd;
        for (Vertex w : g.neighbors_of(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        return nd;
    };
    std::vector<std::vector<int>> prof_a, prof_b;
    for (Vertex v = 0; v < n; ++v) prof_a.push_back(profile(a, v));
    for (Vertex v = 0; v < n; ++v) prof_b.push_back(profile(b, v));
    {
        auto sa = prof_a, sb = prof_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::vector<Vertex> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
        if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
        return x < y;
    });
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
        if (depth == order.size()) return true;
        Vertex u = order[depth];
        for (Vertex w = 0; w < n; ++w) {
            if (used[static_cast<size_t>(w)]) continue;
            if (a.degree(u) != b.degree(w)) continue;
            if (prof_a[static_cast<size_t>(u)] != prof_b[static_cast<size_t>(w)]) continue;
            bool ok = true;
            for (size_t prev = 0; prev < depth && ok; ++prev) {
                Vertex x = order[prev];
                if (a.has_edge(u, x) != b.has_edge(w, map[static_cast<size_t>(x)])) ok = false;
            }
            if (!ok) continue;
            map[static_cast<size_t>(u)] = w;
            used[static_cast<size_t>(w)] = true;
            if (rec(depth + 1)) return true;
            used[static_cast<size_t>(w)] = false;
            map[static_cast<size_t>(u)] = -1;
        }
        return false;
    };
    return rec(0);
}

std::vector<std::pair<Vertex, Vertex>> max_matching(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> match(static_cast<size_t>(n), -1), parent(static_cast<size_t>(n)),
        base(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n)), in_blossom(static_cast<size_t>(n));

    auto lowest_common_base = [&](int x, int y) {
        std::vector<bool> mark(static_cast<size_t>(n), false);
        while (true) {
            x = base[static_cast<size_t>(x)];
            mark[static_cast<size_t>(x)] = true;
            if (match[static_cast<size_t>(x)] == -1) break;
            x = parent[static_cast<size_t>(match[static_cast<size_t>(x)])];
        }
        while (true) {
            y = base[static_cast<size_t>(y)];
            if (mark[static_cast<size_t>(y)]) return y;
            y = parent[static_cast<size_t>(match[static_cast<size_t>(y)])];
        }
    };
    auto mark_path = [&](int v, int stop, int child) {
        while (base[static_cast<size_t>(v)] != stop) {
            in_blossom[static_cast<size_t>(base[static_cast<size_t>(v)])] = true;
            in_blossom[static_cast<size_t>(base[static_cast<size_t>(match[static_cast<size_t>(v)])])] = true;
            parent[static_cast<size_t>(v)] = child;
            child = match[static_cast<size_t>(v)];
            v = parent[static_cast<size_t>(match[static_cast<size_t>(v)])];
        }
    };
    auto find_augmenting = [&](int root) -> int {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[static_cast<size_t>(root)] = true;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int to : g.neighbors_of(v)) {
                if (base[static_cast<size_t>(v)] == base[static_cast<size_t>(to)] ||
                    match[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match[static_cast<size_t>(to)] != -1 &&
                     parent[static_cast<size_t>(match[static_cast<size_t>(to)])] != -1)) {
                    // odd cycle: contract the blossom
                    int stop = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_path(v, stop, to);
                    mark_path(to, stop, v);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[static_cast<size_t>(base[static_cast<size_t>(i)])]) {
                            base[static_cast<size_t>(i)] = stop;
                            if (!used[static_cast<size_t>(i)]) {
                                used[static_cast<size_t>(i)] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent[static_cast<size_t>(to)] == -1) {
                    parent[static_cast<size_t>(to)] = v;
                    if (match[static_cast<size_t>(to)] == -1) return to;
                    used[static_cast<size_t>(match[static_cast<size_t>(to)])] = true;
                    queue.push_back(match[static_cast<size_t>(to)]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[static_cast<size_t>(v)] != -1) continue;
        int end = find_augmenting(v);
        while (end != -1) {
            int pv = parent[static_cast<size_t>(end)];
            int ppv = match[static_cast<size_t>(pv)];
            match[static_cast<size_t>(end)] = pv;
            match[static_cast<size_t>(pv)] = end;
            end = ppv;
        }
    }
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int v = 0; v < n; ++v)
        if (match[static_cast<size_t>(v)] > v) out.emplace_back(v, match[static_cast<size_t>(v)]);
    return out;
}

std::optional<std::vector<std::pair<Vertex, Vertex>>> min_edge_cover(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return std::nullopt;
    std::vector<std::pair<Vertex, Vertex>> cover = max_matching(g);
    std::vector<bool> met(static_cast<size_t>(g.vertex_count()), false);
    for (const auto& [u, v] : cover) met[static_cast<size_t>(u)] = met[static_cast<size_t>(v)] = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!met[static_cast<size_t>(v)]) {
            Vertex w = g.neighbors_of(v).front();
            cover.emplace_back(std::min(v, w), std::max(v, w));
            met[static_cast<size_t>(v)] = true;
        }
    std::sort(cover.begin(), cover.end());
    return cover;
}

}  // namespace upg
