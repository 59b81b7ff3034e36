#pragma once

#include <cstdint>

#include "gh/boolfun.hpp"
#include "gh/game.hpp"

namespace gh {

struct VerifyResult {
    bool ok = true;
    uint32_t cx = 0, cy = 0;  // lexicographically smallest counterexample when !ok
    uint64_t cases = 0;       // size of the checked domain, 2^(2n)
};

// Brute-force check that the game's terminal side equals f on every input
// pair (Bob side <=> f = 1). computes() is the OpenMP kernel; the serial
// version is the reference implementation used by tests and the benchmark.
VerifyResult computes(const GardenHoseGame& g, const BooleanFunction& f);
VerifyResult computes_serial(const GardenHoseGame& g, const BooleanFunction& f);

}  // namespace gh
