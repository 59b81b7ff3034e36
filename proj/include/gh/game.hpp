#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gh {

// A matching: edges with maximum degree 1 and no self-loops. Vertices are
// pipe numbers 1..s; vertex 0 is the water tap, which only exists on
// Alice's side.
struct Matching {
    std::vector<std::pair<int, int>> edges;  // normalized u < v, kept sorted

    void add(int u, int v);
    int partner(int v) const;  // -1 when unmatched
    bool operator==(const Matching&) const = default;
};

// Returns a problem description, or "" when m is a valid matching on [lo, hi].
std::string check_matching(const Matching& m, int lo, int hi);

enum class Side { alice, bob };

struct PathVertex {
    int v;
    Side side;
    bool operator==(const PathVertex&) const = default;
};

// The unique maximal water path from the tap. After the tap entry, vertices
// come in hose-hop / pipe-traversal pairs, so the length is at most 2s+2.
struct WaterPath {
    std::vector<PathVertex> verts;  // first entry is always the tap {0, alice}
    Side terminal() const { return verts.back().side; }
};

// One garden-hose game: s pipes between the players, and for each input a
// matching describing that player's hose connections. Strategies are rules;
// materialize() turns them into lookup tables.
struct GardenHoseGame {
    int n = 0;  // input bits per player
    int s = 0;  // number of pipes
    std::function<Matching(uint32_t)> alice;  // matching on {0..s}
    std::function<Matching(uint32_t)> bob;    // matching on {1..s}
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

// Checks every input's matching (2^n per player).
ValidationReport validate_game(const GardenHoseGame& g);

// Water flow for one input pair. Requires a valid game; throws if the walk
// revisits a vertex (which only a broken strategy can cause).
WaterPath flow(const GardenHoseGame& g, uint32_t x, uint32_t y);

// Flat partner-array form for the hot verification loops: slot v holds the
// hose partner of pipe v, or -1. Alice arrays are indexed 0..s, Bob arrays
// 1..s (slot 0 unused).
std::vector<int> partner_array(const Matching& m, int s);
Side flow_terminal(const std::vector<int>& apartner, const std::vector<int>& bpartner);

GardenHoseGame materialize(const GardenHoseGame& g);

}  // namespace gh
