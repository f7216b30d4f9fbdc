#include "upg/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace upg {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // next non-empty line with comments stripped; false at end of input
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            size_t end = raw.find_last_not_of(" \t\r");
            if (end == std::string::npos) continue;
            raw.erase(end + 1);
            out = raw;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("line " + std::to_string(line_no) + ": " + what);
    }
};

std::vector<long> numbers_after_tag(LineReader& reader, const std::string& line, char tag) {
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head.size() != 1 || head[0] != tag)
        reader.fail("expected a '" + std::string(1, tag) + "' line, got '" + line + "'");
    std::vector<long> out;
    long v;
    while (ss >> v) out.push_back(v);
    std::string junk;
    if (ss.clear(), ss >> junk) reader.fail("trailing junk '" + junk + "'");
    return out;
}

std::pair<long, long> header(LineReader& reader, const std::string& kind) {
    std::string line;
    if (!reader.next(line)) reader.fail("missing 'p " + kind + "' header");
    std::istringstream ss(line);
    std::string p, k;
    long a = -1, b = -1;
    ss >> p >> k >> a >> b;
    if (p != "p" || k != kind || a < 0 || b < 0 || !(ss >> std::ws).eof())
        reader.fail("malformed header, expected 'p " + kind + " <n> <m>'");
    return {a, b};
}

}  // namespace

Graph parse_graph(std::istream& in) {
    LineReader reader{in};
    auto [n, m] = header(reader, "graph");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        std::string line;
        if (!reader.next(line)) reader.fail("expected " + std::to_string(m) + " edge lines");
        std::vector<long> nums = numbers_after_tag(reader, line, 'e');
        if (nums.size() != 2) reader.fail("edge line needs exactly two endpoints");
        try {
            g.add_edge(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
        } catch (const std::exception& e) {
            reader.fail(e.what());
        }
    }
    std::string extra;
    if (reader.next(extra)) reader.fail("unexpected content after " + std::to_string(m) + " edges");
    return g;
}

std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    out << "p graph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

TreeModel parse_model(std::istream& in) {
    LineReader reader{in};
    auto [n, t] = header(reader, "model");
    if (t < 1) reader.fail("model needs at least one host node");
    TreeModel m;
    m.host = Graph(static_cast<int>(t));
    for (long i = 0; i + 1 < t; ++i) {
        std::string line;
        if (!reader.next(line)) reader.fail("expected " + std::to_string(t - 1) + " host edges");
        std::vector<long> nums = numbers_after_tag(reader, line, 't');
        if (nums.size() != 2) reader.fail("host edge line needs exactly two nodes");
        try {
            m.host.add_edge(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
        } catch (const std::exception& e) {
            reader.fail(e.what());
        }
    }
    if (!is_tree(m.host)) reader.fail("host edges do not form a tree");
    m.assignment.assign(static_cast<size_t>(n), VertexSet{});
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (long i = 0; i < n; ++i) {
        std::string line;
        if (!reader.next(line)) reader.fail("expected " + std::to_string(n) + " vertex lines");
        std::vector<long> nums = numbers_after_tag(reader, line, 'v');
        if (nums.size() < 2) reader.fail("vertex line needs a vertex and at least one node");
        long v = nums[0];
        if (v < 0 || v >= n) reader.fail("vertex " + std::to_string(v) + " out of range");
        if (seen[static_cast<size_t>(v)]) reader.fail("vertex " + std::to_string(v) + " repeated");
        seen[static_cast<size_t>(v)] = true;
        std::vector<Vertex> nodes;
        for (size_t j = 1; j < nums.size(); ++j) {
            if (nums[j] < 0 || nums[j] >= t)
                reader.fail("host node " + std::to_string(nums[j]) + " out of range");
            nodes.push_back(static_cast<int>(nums[j]));
        }
        m.assignment[static_cast<size_t>(v)] = VertexSet(std::move(nodes));
        if (!node_set_is_path(m, static_cast<Vertex>(v)))
            reader.fail("vertex " + std::to_string(v) + " is not assigned a host path");
    }
    std::string extra;
    if (reader.next(extra)) reader.fail("unexpected content after the vertex lines");
    return m;
}

std::string emit_model(const TreeModel& m) {
    std::ostringstream out;
    out << "p model " << m.vertex_count() << " " << m.node_count() << "\n";
    for (const auto& [a, b] : m.host.edges()) out << "t " << a << " " << b << "\n";
    for (Vertex v = 0; v < m.vertex_count(); ++v) {
        out << "v " << v;
        for (int t : m.assignment[static_cast<size_t>(v)]) out << " " << t;
        out << "\n";
    }
    return out.str();
}

ThreeDMInstance parse_3dm(std::istream& in) {
    LineReader reader{in};
    auto [n, m] = header(reader, "3dm");
    std::vector<std::array<int, 3>> triples;
    for (long i = 0; i < m; ++i) {
        std::string line;
        if (!reader.next(line)) reader.fail("expected " + std::to_string(m) + " triple lines");
        std::vector<long> nums = numbers_after_tag(reader, line, 's');
        if (nums.size() != 3) reader.fail("triple line needs exactly three indices");
        for (long coord : nums)
            if (coord < 0 || coord >= n)
                reader.fail("triple index " + std::to_string(coord) + " out of range [0," +
                            std::to_string(n) + ")");
        triples.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1]),
                           static_cast<int>(nums[2])});
    }
    std::string extra;
    if (reader.next(extra)) reader.fail("unexpected content after the triples");
    try {
        return ThreeDMInstance::checked(static_cast<int>(n), std::move(triples));
    } catch (const std::exception& e) {
        reader.fail(e.what());
    }
}

std::string emit_3dm(const ThreeDMInstance& raw) {
    ThreeDMInstance inst = ThreeDMInstance::checked(raw.n, raw.triples);
    std::ostringstream out;
    out << "p 3dm " << inst.n << " " << inst.m() << "\n";
    for (const auto& t : inst.triples) out << "s " << t[0] << " " << t[1] << " " << t[2] << "\n";
    return out.str();
}

VertexSet parse_terminals(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) reader.fail("missing terminal line");
    std::vector<long> nums = numbers_after_tag(reader, line, 'x');
    if (nums.empty()) reader.fail("terminal line needs at least one vertex");
    std::vector<Vertex> ids;
    for (long v : nums) {
        if (v < 0) reader.fail("negative terminal id");
        ids.push_back(static_cast<int>(v));
    }
    std::string extra;
    if (reader.next(extra)) reader.fail("unexpected content after the terminal line");
    return VertexSet(std::move(ids));
}

std::string emit_terminals(const VertexSet& x) {
    std::ostringstream out;
    out << "x";
    for (Vertex v : x) out << " " << v;
    out << "\n";
    return out.str();
}

int parse_budget(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line)) reader.fail("missing budget line");
    std::vector<long> nums = numbers_after_tag(reader, line, 'k');
    if (nums.size() != 1 || nums[0] < 0) reader.fail("budget line needs one non-negative integer");
    std::string extra;
    if (reader.next(extra)) reader.fail("unexpected content after the budget line");
    return static_cast<int>(nums[0]);
}

std::string emit_budget(int k) { return "k " + std::to_string(k) + "\n"; }

std::string fnv1a64_hex(std::string_view bytes) {
    uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int shift = 60; shift >= 0; shift -= 4) out += digits[(hash >> shift) & 0xf];
    return out;
}

std::string digest_graph(const Graph& g) { return fnv1a64_hex(emit_graph(g)); }

std::string digest_3dm(const ThreeDMInstance& inst) { return fnv1a64_hex(emit_3dm(inst)); }

}  // namespace upg
