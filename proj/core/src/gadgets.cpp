#include "upg/gadgets.hpp"

#include <algorithm>
#include <string>

namespace upg {

namespace {

void add_clique(Graph& g, const std::vector<Vertex>& members) {
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!g.has_edge(members[i], members[j])) g.add_edge(members[i], members[j]);
}

}  // namespace

GadgetOutput cds_from_3dm(const ThreeDMInstance& raw) {
    ThreeDMInstance inst = ThreeDMInstance::checked(raw.n, raw.triples);
    const int n = inst.n;
    const int m = inst.m();

    // role-major vertex numbering: a_j, b_j, c_j, x_j, y_j, z1_j, z2_j, z3_j,
    // then the three element families
    auto a = [&](int j) { return j; };
    auto b = [&](int j) { return m + j; };
    auto c = [&](int j) { return 2 * m + j; };
    auto x = [&](int j) { return 3 * m + j; };
    auto y = [&](int j) { return 4 * m + j; };
    auto z1 = [&](int j) { return 5 * m + j; };
    auto z2 = [&](int j) { return 6 * m + j; };
    auto z3 = [&](int j) { return 7 * m + j; };
    auto p = [&](int i) { return 8 * m + i; };
    auto q = [&](int i) { return 8 * m + n + i; };
    auto r = [&](int i) { return 8 * m + 2 * n + i; };

    GadgetOutput out;
    out.graph = Graph(8 * m + 3 * n);
    out.budget = 2 * m + n;
    out.labels.assign(static_cast<size_t>(8 * m + 3 * n), "");
    for (int j = 0; j < m; ++j) {
        out.labels[static_cast<size_t>(a(j))] = "a_" + std::to_string(j);
        out.labels[static_cast<size_t>(b(j))] = "b_" + std::to_string(j);
        out.labels[static_cast<size_t>(c(j))] = "c_" + std::to_string(j);
        out.labels[static_cast<size_t>(x(j))] = "x_" + std::to_string(j);
        out.labels[static_cast<size_t>(y(j))] = "y_" + std::to_string(j);
        out.labels[static_cast<size_t>(z1(j))] = "z1_" + std::to_string(j);
        out.labels[static_cast<size_t>(z2(j))] = "z2_" + std::to_string(j);
        out.labels[static_cast<size_t>(z3(j))] = "z3_" + std::to_string(j);
    }
    for (int i = 0; i < n; ++i) {
        out.labels[static_cast<size_t>(p(i))] = "p_" + std::to_string(i);
        out.labels[static_cast<size_t>(q(i))] = "q_" + std::to_string(i);
        out.labels[static_cast<size_t>(r(i))] = "r_" + std::to_string(i);
    }

    // the edge set is a union of cliques, one per host node of the model
    std::vector<Vertex> big;
    for (int j = 0; j < m; ++j) {
        big.push_back(a(j));
        big.push_back(b(j));
        big.push_back(c(j));
        big.push_back(x(j));
    }
    add_clique(out.graph, big);
    for (int j = 0; j < m; ++j) {
        add_clique(out.graph, {a(j), b(j), x(j), y(j)});
        add_clique(out.graph, {a(j), y(j), z1(j)});
        add_clique(out.graph, {b(j), y(j), z2(j)});
        add_clique(out.graph, {c(j), x(j), z3(j)});
    }
    std::vector<std::vector<Vertex>> p_cliques(static_cast<size_t>(n)),
        q_cliques(static_cast<size_t>(n)), r_cliques(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        p_cliques[static_cast<size_t>(i)] = {p(i)};
        q_cliques[static_cast<size_t>(i)] = {q(i)};
        r_cliques[static_cast<size_t>(i)] = {r(i)};
    }
    for (int j = 0; j < m; ++j) {
        const auto& t = inst.triples[static_cast<size_t>(j)];
        p_cliques[static_cast<size_t>(t[0])].push_back(a(j));
        q_cliques[static_cast<size_t>(t[1])].push_back(b(j));
        r_cliques[static_cast<size_t>(t[2])].push_back(c(j));
    }
    for (int i = 0; i < n; ++i) {
        add_clique(out.graph, p_cliques[static_cast<size_t>(i)]);
        add_clique(out.graph, q_cliques[static_cast<size_t>(i)]);
        add_clique(out.graph, r_cliques[static_cast<size_t>(i)]);
    }

    // host tree: a root carrying the big clique, four nodes per triple, one
    // pendant node per element
    const int t_root = 0;
    auto t_ab = [&](int j) { return 1 + 4 * j; };
    auto t_a = [&](int j) { return 1 + 4 * j + 1; };
    auto t_b = [&](int j) { return 1 + 4 * j + 2; };
    auto t_c = [&](int j) { return 1 + 4 * j + 3; };
    auto t_p = [&](int i) { return 1 + 4 * m + i; };
    auto t_q = [&](int i) { return 1 + 4 * m + n + i; };
    auto t_r = [&](int i) { return 1 + 4 * m + 2 * n + i; };

    out.model.host = Graph(1 + 4 * m + 3 * n);
    for (int j = 0; j < m; ++j) {
        out.model.host.add_edge(t_root, t_ab(j));
        out.model.host.add_edge(t_ab(j), t_a(j));
        out.model.host.add_edge(t_ab(j), t_b(j));
        out.model.host.add_edge(t_root, t_c(j));
    }
    for (int i = 0; i < n; ++i) {
        out.model.host.add_edge(t_root, t_p(i));
        out.model.host.add_edge(t_root, t_q(i));
        out.model.host.add_edge(t_root, t_r(i));
    }

    out.model.assignment.assign(static_cast<size_t>(out.graph.vertex_count()), VertexSet{});
    for (int j = 0; j < m; ++j) {
        const auto& t = inst.triples[static_cast<size_t>(j)];
        out.model.assignment[static_cast<size_t>(a(j))] =
            VertexSet{t_a(j), t_ab(j), t_root, t_p(t[0])};
        out.model.assignment[static_cast<size_t>(b(j))] =
            VertexSet{t_b(j), t_ab(j), t_root, t_q(t[1])};
        out.model.assignment[static_cast<size_t>(c(j))] = VertexSet{t_c(j), t_root, t_r(t[2])};
        out.model.assignment[static_cast<size_t>(x(j))] = VertexSet{t_ab(j), t_root, t_c(j)};
        out.model.assignment[static_cast<size_t>(y(j))] = VertexSet{t_a(j), t_ab(j), t_b(j)};
        out.model.assignment[static_cast<size_t>(z1(j))] = VertexSet{t_a(j)};
        out.model.assignment[static_cast<size_t>(z2(j))] = VertexSet{t_b(j)};
        out.model.assignment[static_cast<size_t>(z3(j))] = VertexSet{t_c(j)};
    }
    for (int i = 0; i < n; ++i) {
        out.model.assignment[static_cast<size_t>(p(i))] = VertexSet{t_p(i)};
        out.model.assignment[static_cast<size_t>(q(i))] = VertexSet{t_q(i)};
        out.model.assignment[static_cast<size_t>(r(i))] = VertexSet{t_r(i)};
    }

    VerificationReport check = validate(out.model, out.graph, true);
    if (!check.pass()) throw integrity_error("cds_from_3dm: model does not realize the gadget");
    return out;
}

GadgetOutput steiner_from_3dm(const ThreeDMInstance& inst) {
    GadgetOutput out = cds_from_3dm(inst);
    out.terminals = simplicial_vertices(out.graph);
    return out;
}

GadgetOutput steiner_from_ds(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (n == 0) throw instance_error("steiner_from_ds: empty input graph");
    // vertex layout: root, then one copy vertex per input vertex, then the
    // input vertices themselves
    auto copy_of = [&](Vertex v) { return 1 + v; };
    auto orig = [&](Vertex v) { return 1 + n + v; };

    GadgetOutput out;
    out.graph = Graph(2 * n + 1);
    out.budget = k;
    out.labels.assign(static_cast<size_t>(2 * n + 1), "");
    out.labels[0] = "r-root";
    std::vector<Vertex> terminal_ids{0};
    for (Vertex v = 0; v < n; ++v) {
        out.labels[static_cast<size_t>(copy_of(v))] = "v-prime_" + std::to_string(v);
        out.labels[static_cast<size_t>(orig(v))] = "v_" + std::to_string(v);
        terminal_ids.push_back(copy_of(v));
        out.graph.add_edge(0, orig(v));
        out.graph.add_edge(copy_of(v), orig(v));
        for (Vertex w : g.neighbors_of(v)) out.graph.add_edge(copy_of(v), orig(w));
    }
    out.terminals = VertexSet(std::move(terminal_ids));
    return out;
}

ThicknessWitness subdivide(const Graph& g) {
    const int n = g.vertex_count();
    ThicknessWitness out;
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    out.sub = Graph(n + static_cast<int>(edges.size()));
    for (size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];  // u < v by construction
        Vertex w = n + static_cast<int>(e);
        out.sub.add_edge(u, w);
        out.sub.add_edge(w, v);
        out.part1.emplace_back(u, w);
        out.part2.emplace_back(w, v);
    }
    return out;
}

std::pair<bool, bool> iso_transport(const Graph& g1, const Graph& g2, int size_cap) {
    if (g1.vertex_count() > size_cap || g2.vertex_count() > size_cap)
        throw size_error("iso_transport: inputs exceed the size cap");
    bool direct = isomorphic(g1, g2);
    bool subdivided = isomorphic(subdivide(g1).sub, subdivide(g2).sub);
    return {direct, subdivided};
}

}  // namespace upg
