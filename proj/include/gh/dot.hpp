#pragma once

#include <cstdint>
#include <string>

#include "gh/game.hpp"

namespace gh {

// Graphviz rendering of one game instance: two node columns (Alice's pipe
// ends plus the tap, Bob's pipe ends), gray pipe edges, solid hose edges,
// and the water path for (x, y) highlighted in blue. Output is
// deterministic: nodes and edges are emitted in ascending order.
std::string render_diagram(const GardenHoseGame& g, uint32_t x, uint32_t y);

}  // namespace gh
