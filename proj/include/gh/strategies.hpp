#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gh/boolfun.hpp"
#include "gh/game.hpp"

namespace gh {

// XOR on one bit with 3 pipes: alice connects the tap to pipe 1+x, bob
// connects pipe 1+y to pipe 3.
GardenHoseGame build_xor();

// Equality on n bits with 3n+1 pipes. Pipes R_0..R_n carry the "still equal"
// token from index to index; Q^0_i/Q^1_i encode the bit compared at index i.
// Alice connects the tap to R_0 and R_i to Q^{x_i}_i; Bob connects R_{i-1}
// to Q^{y_i}_i. Water exits at R_n on Bob's side exactly when x == y.
GardenHoseGame build_eq(int n);

// Inner product mod 2 with 4n+1 pipes. Q^b_i/R^b_i track the running result
// register b at index i: Bob crosses Q^b -> R^{b xor y_i}; Alice chains
// R^b_i -> Q^b_k between consecutive indices with x = 1, leaves R^0 open at
// the last such index and routes R^1 to the End pipe. x = 0^n leaves the tap
// unconnected.
GardenHoseGame build_ip(int n);

// Majority-style threshold sum_i x_i y_i >= n/2 + 1 for even n, with
// (n+2)*n pipes: a counter track Q^0..Q^{n/2} / R^0..R^{n/2} per index.
// Bob shifts the counter up when y_i = 1 (overflow at n/2 exits on his
// side); Alice chains counter tracks between indices with x = 1.
// The optimized variant keeps only counter values that are reachable and
// can still meet the threshold (roughly half the pipes).
GardenHoseGame build_maj(int n, bool optimized = false);

// Any f on n <= 12 bits per player with 2^n + 1 pipes: one pipe per x plus a
// reserve. Alice connects the tap to pipe(x); Bob pairs up the pipes of
// {a : f(a,y) = 0}, sending an odd leftover to the reserve pipe.
GardenHoseGame build_generic(const BooleanFunction& f);

// Size-preserving local preprocessing: play g on (alpha(x), beta(y)).
// The result has n_new input bits per player; g.n bits come out of the maps.
GardenHoseGame preprocess(const GardenHoseGame& g, int n_new,
                          std::function<uint32_t(uint32_t)> alpha,
                          std::function<uint32_t(uint32_t)> beta);

// One-time-pad trick: turn a single-input predicate g on n bits into the
// two-player f(x, y) = g(x xor y).
BooleanFunction otp_encode(int n, std::function<bool(uint32_t)> g);

}  // namespace gh
