#include <doctest.h>

#include <fstream>
#include <sstream>

#include "upg/gadgets.hpp"
#include "upg/io.hpp"

using namespace upg;

namespace {

std::string golden(const std::string& name) {
    std::ifstream in(std::string(UPG_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename Parser>
auto parse_text(const std::string& text, Parser parser) {
    std::istringstream in(text);
    return parser(in);
}

}  // namespace

TEST_CASE("graph files round-trip to canonical form") {
    std::string messy = "# a comment\np graph 2 1\n\ne 1 0   # trailing note\n";
    Graph g = parse_text(messy, parse_graph);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    std::string canon = emit_graph(g);
    CHECK(canon == "p graph 2 1\ne 0 1\n");
    CHECK(emit_graph(parse_text(canon, parse_graph)) == canon);
}

TEST_CASE("graph parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_text("p graph 2 1\ne 0 2\n", parse_graph),
                         doctest::Contains("line 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse_text("p graph 2 2\ne 0 1\ne 1 0\n", parse_graph),
                         doctest::Contains("duplicate"), parse_error);
    CHECK_THROWS_AS(parse_text("p graph 2 1\n", parse_graph), parse_error);
    CHECK_THROWS_AS(parse_text("q graph 2 0\n", parse_graph), parse_error);
}

TEST_CASE("model files round-trip and reject non-path assignments") {
    std::string text = "p model 4 3\nt 0 1\nt 1 2\nv 0 0 1 2\nv 1 0\nv 2 2\nv 3 1\n";
    TreeModel m = parse_text(text, parse_model);
    CHECK(m.node_count() == 3);
    CHECK(emit_model(m) == text);

    // vertex 0 on the two host ends only: not a path
    std::string broken = "p model 1 3\nt 0 1\nt 1 2\nv 0 0 2\n";
    CHECK_THROWS_WITH_AS(parse_text(broken, parse_model), doctest::Contains("vertex 0"),
                         parse_error);

    // host edges that are not a tree
    std::string cyclic = "p model 1 3\nt 0 1\nt 0 1\nv 0 0\n";
    CHECK_THROWS_AS(parse_text(cyclic, parse_model), parse_error);
}

TEST_CASE("3dm files round-trip, reject bad indices and duplicates") {
    std::string text = "p 3dm 2 2\ns 1 1 1\ns 0 0 0\n";
    ThreeDMInstance inst = parse_text(text, parse_3dm);
    CHECK(inst.m() == 2);
    CHECK(emit_3dm(inst) == "p 3dm 2 2\ns 0 0 0\ns 1 1 1\n");  // canonical order

    CHECK_THROWS_WITH_AS(parse_text("p 3dm 2 1\ns 0 2 0\n", parse_3dm),
                         doctest::Contains("out of range"), parse_error);
    CHECK_THROWS_WITH_AS(parse_text("p 3dm 2 2\ns 0 0 0\ns 0 0 0\n", parse_3dm),
                         doctest::Contains("duplicate"), parse_error);
}

TEST_CASE("terminals and budget") {
    VertexSet x = parse_text("x 3 1 2\n", parse_terminals);
    CHECK(emit_terminals(x) == "x 1 2 3\n");
    CHECK(parse_text("k 5\n", parse_budget) == 5);
    CHECK_THROWS_AS(parse_text("x\n", parse_terminals), parse_error);
    CHECK_THROWS_AS(parse_text("k -1\n", parse_budget), parse_error);
    CHECK_THROWS_AS(parse_text("k 1 2\n", parse_budget), parse_error);
}

TEST_CASE("digest is stable across runs and versions") {
    CHECK(fnv1a64_hex("") == "fnv1a64:cbf29ce484222325");
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(digest_graph(k2) == fnv1a64_hex("p graph 2 1\ne 0 1\n"));
}

TEST_CASE("golden gadget files match byte for byte") {
    ThreeDMInstance inst = ThreeDMInstance::checked(1, {{{0, 0, 0}}});
    GadgetOutput gadget = steiner_from_3dm(inst);
    CHECK(emit_graph(gadget.graph) == golden("gadget_n1m1.graph"));
    CHECK(emit_model(gadget.model) == golden("gadget_n1m1.model"));
    CHECK(emit_terminals(gadget.terminals) == golden("gadget_n1m1.terminals"));
    CHECK(emit_budget(gadget.budget) == golden("gadget_n1m1.budget"));
    CHECK(emit_3dm(inst) == golden("n1m1.3dm"));
}
