#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gh/quantum.hpp"

namespace gh {

// A complete family of 2^n + 1 mutually unbiased bases of dimension 2^n,
// obtained by partitioning the 4^n - 1 non-identity Pauli operators into
// 2^n + 1 classes of 2^n - 1 pairwise commuting ones (each class closed
// under multiplication up to phase) and taking the common eigenbases.
struct MubFamily {
    int n = 0;
    std::vector<std::vector<PauliString>> classes;  // phase-+1 representatives
    std::vector<std::vector<StateVector>> bases;    // bases[a][x] = |e^a_x>
};

// Backtracking search over the symplectic (bit-pair) representation; n <= 3.
// Deterministic: classes come out ordered by their smallest member and each
// basis vector's index encodes the generator eigenvalues, with the phase
// fixed by making the first nonzero amplitude real positive.
MubFamily build_mub(int n);

// z such that U|e^a_x> = |e^a_z> up to global phase. Existence is the
// point of the construction: a Pauli operator permutes each basis within
// itself. Throws when no overlap is within 1e-8 of modulus one.
uint32_t mub_permute(const PauliString& u, const MubFamily& family, int a, uint32_t x);

// Teleport-and-permute attack on the basis-state identification protocol:
// the state |e^a_x> is teleported qubit by qubit (n EPR pairs), the far end
// measures the uncorrected state in basis a, and the classical information
// (a, z, accumulated Pauli U) is inverted to recover x. Always exact.
uint32_t pv_mub_attack(const MubFamily& family, int a, uint32_t x, std::mt19937_64& rng);
uint32_t pv_mub_attack(int n, int a, uint32_t x, std::mt19937_64& rng);

}  // namespace gh
