#pragma once

#include <vector>

#include "gh/boolfun.hpp"
#include "gh/game.hpp"

namespace gh {

struct SearchResult {
    bool found = false;
    int size = 0;            // minimal game size when found, else cap+1 (a lower bound)
    GardenHoseGame witness;  // computes f when found
};

// Exact garden-hose complexity for tiny functions: for s = 0, 1, ... up to
// cap, enumerate every assignment of matchings to Alice's inputs (pruned to
// pipe-relabeling canonical forms, where pipes are numbered by first use),
// then look for a compatible Bob matching per y (columns are independent).
// The parallel version splits the assignment space over threads; both
// return the same (first-in-enumeration-order) witness. space_limit guards
// the raw per-s assignment count.
SearchResult exhaustive_gh(const BooleanFunction& f, int cap = 6,
                           double space_limit = 1e8);
SearchResult exhaustive_gh_serial(const BooleanFunction& f, int cap = 6,
                                  double space_limit = 1e8);

// All matchings over the vertex range [lo, hi], in the fixed enumeration
// order the search uses (smallest free vertex left unmatched first).
std::vector<Matching> all_matchings(int lo, int hi);

}  // namespace gh
