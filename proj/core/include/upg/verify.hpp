#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "upg/report.hpp"
#include "upg/types.hpp"

namespace upg {

// One line of the gadget equivalence table. `cds` and `steiner` hold the
// exact objective when it is within the bound, ">bound" when the budgeted
// search ruled the bound out, and "inf" when no solution exists at any size
// (gadgets built from instances that leave an element uncovered are
// disconnected).
struct GadgetRow {
    std::string digest;
    int n = 0;
    int m = 0;
    bool three_dm_yes = false;
    std::string cds;
    std::string steiner;
    int bound = 0;
    bool agree = false;
};

struct GadgetSweep {
    VerificationReport report;
    std::vector<GadgetRow> rows;
};

// Rows sorted by digest, rendered as a fixed-width text table. Byte-stable.
std::string rows_canonical_table(std::vector<GadgetRow> rows);

// Every 3d-matching instance with universe <= nmax and 1..mmax triples (all
// triple subsets): matching exists iff connected domination fits the bound
// iff the Steiner companion fits the bound; plus the structural checks
// (vertex count, path model, separators; diameter and dominating clique on
// instances covering every element).
GadgetSweep verify_gadget(int nmax, int mmax);

// Seeded random graphs: domination number of g equals the Steiner objective
// of the bipartite companion instance, threshold by threshold; the companion
// is bipartite with 2n+1 vertices and an unchanged budget.
VerificationReport verify_bipartite_gadget(int graph_count, int nmax, uint64_t seed);

// Subdivision suite: the two-part edge split is a partition into star
// forests, and subdividing preserves isomorphism verdicts (crafted
// equal-degree-sequence pairs included).
VerificationReport verify_subdivision(int graph_count, int pair_count, int graph_nmax,
                                      int pair_nmax, uint64_t seed);

// Exhaustive solver-vs-oracle sweep over all connected graphs up to nmax
// (one per isomorphism class) that admit a path model and have diameter at
// most 2, across every terminal set of size >= 2 (seeded sampling above
// sample_cap per graph).
VerificationReport verify_solver(int nmax, int sample_cap, uint64_t seed);

// Reduction fuzzing: twin / simplicial / leafy removals preserve the exact
// Steiner objective (trials each), and the replacement exchange never turns
// a feasible set infeasible (trials).
VerificationReport verify_lemmas(int trials, uint64_t seed);

}  // namespace upg
