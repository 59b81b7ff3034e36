#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "gh/boolfun.hpp"
#include "gh/game.hpp"
#include "gh/quantum.hpp"

namespace gh {

// Symbolic teleportation tracking along the water path pi(x, y). Every hose
// connection the water crosses is one teleportation hop, so it consumes one
// Bell outcome (the tap connection first) and contributes its correction to
// the product, later hops multiplied on the left. No statevector involved.
struct FrameAttack {
    Side side = Side::alice;  // always the water path's terminal side
    PauliString correction;   // single qubit, exact phase
    WaterPath path;
};

FrameAttack pauli_frame_attack(const GardenHoseGame& g, uint32_t x, uint32_t y,
                               const std::vector<BellOutcome>& outcomes);

constexpr int kQubitCap = 24;

// Full EPR-pair attack: one input qubit plus one EPR pair per pipe (pipe i
// holds Alice's half at qubit 2i-1 and Bob's at 2i), one Bell measurement
// per hose connection of both players (Alice's edges in order, then Bob's),
// and the frame correction applied at the exit port. fidelity compares the
// exit-port qubit with psi and lands at 1 up to float error.
struct AttackReport {
    Side side = Side::alice;
    double fidelity = 0;
    PauliString correction;                  // composed in path order
    std::vector<BellOutcome> path_outcomes;  // tap hop first
};

AttackReport statevector_attack(const GardenHoseGame& g, uint32_t x, uint32_t y,
                                const StateVector& psi, std::mt19937_64& rng);

// Prover-side hook for one round of the qubit-routing protocol. The state
// arrives with qubit 0 holding the verifier's retained EPR half and qubit 1
// the qubit in flight. A hook may extend the state with ancillas but must
// leave qubit 0 untouched; it reports the final state, which qubit it
// delivers, and to which side (alice = the f=0 verifier).
struct Delivery {
    StateVector state;
    int qubit = 1;
    Side side = Side::alice;
};

using ProverHook =
    std::function<Delivery(StateVector, uint32_t, uint32_t, std::mt19937_64&)>;

ProverHook honest_prover(const BooleanFunction& f);
// Measures the flight qubit in the computational basis and forwards the
// collapsed qubit to the correct side: the classic intercept-and-resend
// cheat, accepted with probability 3/4.
ProverHook naive_measure_prover(const BooleanFunction& f);
// Runs the EPR-pair attack over the given game (which should compute f).
ProverHook game_attack_prover(const GardenHoseGame& g);

// One message round: the verifier prepares an EPR pair and sends one half
// through the prover hook; it accepts when the delivery side matches
// f(x, y) and both halves agree under a fresh shared random basis
// (computational or Hadamard — a Bell pair correlates in either).
bool pv_qubit_round(const BooleanFunction& f, uint32_t x, uint32_t y,
                    const ProverHook& prover, std::mt19937_64& rng);

}  // namespace gh
