#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "upg/graph.hpp"
#include "upg/threedm.hpp"
#include "upg/tree_model.hpp"
#include "upg/types.hpp"

namespace upg {

// Line-oriented instance formats, 0-indexed ids, '#' starts a comment:
//   graph:      p graph <n> <m>    then m lines  e <u> <v>
//   tree model: p model <n> <t>    then t-1 lines  t <a> <b>
//               then n lines  v <vertex> <node> [<node> ...]
//   3dm:        p 3dm <n> <m>      then m lines  s <p> <q> <r>
//   terminals:  x <v1> <v2> ...    (single line)
//   budget:     k <int>            (single line)
// emit(parse(f)) is the canonical form of f: sorted edges, sorted node sets,
// sorted triples, no comments. Parse failures carry the line number.

Graph parse_graph(std::istream& in);
std::string emit_graph(const Graph& g);

// The model parser checks host tree-ness and that every node set induces a
// path of the host; the intersection law against a target graph is
// validate()'s job.
TreeModel parse_model(std::istream& in);
std::string emit_model(const TreeModel& m);

ThreeDMInstance parse_3dm(std::istream& in);
std::string emit_3dm(const ThreeDMInstance& inst);

VertexSet parse_terminals(std::istream& in);
std::string emit_terminals(const VertexSet& x);

int parse_budget(std::istream& in);
std::string emit_budget(int k);

// 64-bit FNV-1a over the canonical emission, rendered as fnv1a64:<16 hex>.
std::string fnv1a64_hex(std::string_view bytes);
std::string digest_graph(const Graph& g);
std::string digest_3dm(const ThreeDMInstance& inst);

}  // namespace upg
