#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gh/circuit.hpp"
#include "gh/game.hpp"
#include "gh/perm.hpp"

namespace gh {

// Width-5 permutation branching programs. An instruction reads one bit of
// z = x || y (positions 1..2n) and contributes on_true or on_false; the
// program evaluates to the left-to-right product of its instructions.
struct Instruction {
    int index = 1;
    Perm on_true, on_false;
    bool operator==(const Instruction&) const = default;
};

struct Program {
    int input_len = 0;  // 2n
    std::vector<Instruction> instrs;
};

Perm eval_program(const Program& p, uint32_t z);

// p computes some predicate with output mu (evaluates to mu on true inputs,
// identity otherwise). The returned program computes the same predicate
// with output target: theta (target = theta mu theta^-1) multiplies the
// first instruction on the left and theta^-1 the last on the right.
Program conjugate_output(const Program& p, const Perm& mu, const Perm& target);

// Same-length program computing the negation, with output target. The last
// instruction is right-multiplied by mu^-1 (swapping which inputs evaluate
// to the identity), then the output is conjugated from mu^-1 to target.
Program negate_program(const Program& p, const Perm& mu, const Perm& target);

// Barrington translation: length <= 4^depth, output cycle (1 2 3 4 5).
// AND gates use the commutator construction, OR gates go through De Morgan,
// NOT gates cost nothing.
Program compile_circuit(const Circuit& c);
inline Perm compile_output() { return five_cycle({1, 2, 3, 4, 5}); }

// Layered form for the two-player game translation: instructions merged
// into maximal same-owner runs, padded with identity layers so that layers
// strictly alternate starting with Alice and the count is even. A layer's
// value depends only on the owner's n input bits.
struct AltInstruction {
    Side owner;
    std::function<Perm(uint32_t)> value;
};

struct AltProgram {
    int n = 0;
    std::vector<AltInstruction> steps;
};

AltProgram alternate(const Program& p, int n);
Perm eval_alt(const AltProgram& ap, uint32_t x, uint32_t y);

// One-pipe-per-layer-position translation: size 5l+4. The tap enters layer
// 1 at position P_1(1); for i >= 1 the owner of instruction i+1 connects
// Q^i_k to Q^{i+1}_{P_{i+1}(k)} on their side (Bob for odd i, Alice for
// even i); Alice terminates layer l, leaving Q^l_1 open (identity product,
// f=0) and routing Q^l_2..Q^l_5 to Bob through four exit pipes.
GardenHoseGame program_to_game(const AltProgram& ap);

}  // namespace gh
