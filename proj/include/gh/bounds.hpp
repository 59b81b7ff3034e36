#pragma once

#include <cstdint>

#include "gh/boolfun.hpp"

namespace gh {

// f is injective for Alice when every two distinct x values give distinct
// truth-table rows (equivalently: some y separates them); the Bob variant
// looks at columns. Exact brute force, so n is capped at 12.
bool injective_for_alice(const BooleanFunction& f);
bool injective_for_bob(const BooleanFunction& f);

// Defining inequalities behind the two lower bounds, decided exactly:
// s·log2(s) >= n is s^s >= 2^n over big integers, and the counting
// threshold (s+1)·log2(s+1) >= 2^(n-1) is exact for powers of two and
// decided by 100-digit floats (with a wide-margin assertion) otherwise.
bool injective_bound_holds(int64_t s, int n);
bool counting_bound_holds(int64_t s, int n);

// Smallest s with s·log2(s) >= n. The pigeonhole argument counts one
// player's matching choices, so this is a lower bound on the game size for
// functions injective for Bob (s^s choices on his side); Alice's side
// includes the tap ((s+1)^(s+1) choices), so injectivity for Alice only
// certifies size >= this value - 1. f(x,y) = x shows the gap is real:
// injective for Alice with a one-pipe game. n up to 2^20.
int64_t min_size_injective_bound(int n);

// Smallest s with (s+1)·log2(s+1) >= 2^(n-1): below this size some n-bit
// function has no game at all, so worst-case size is exponential. n <= 30.
int64_t counting_bound_size(int n);

}  // namespace gh
