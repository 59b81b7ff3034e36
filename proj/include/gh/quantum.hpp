#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gh {

using cplx = std::complex<double>;

// Dense n-qubit state. Qubit 0 owns the most significant index bit, so the
// amplitude at index i belongs to the ket whose label is i written MSB-first.
struct StateVector {
    int qubit_count = 0;
    std::vector<cplx> amp;  // 2^qubit_count amplitudes, squared norm 1
};

StateVector zero_state(int qubits);
StateVector tensor(const StateVector& a, const StateVector& b);
double state_norm(const StateVector& s);
// Throws when the dimension is not 2^qubit_count or the norm is off by
// more than 1e-10.
void check_state(const StateVector& s);

// Deterministic uniform double in [0, 1) from the generator's raw output
// (kept out of std::uniform_real_distribution so results never depend on
// the standard library's sampling strategy).
double canonical_double(std::mt19937_64& rng);

// Haar-random single qubit: two complex gaussians, normalized, global phase
// fixed to make the first nonzero amplitude real positive.
StateVector random_qubit(std::mt19937_64& rng);

// Single-qubit gates. letter is one of I X Y Z.
void apply_pauli_letter(StateVector& s, int qubit, char letter);
void apply_hadamard(StateVector& s, int qubit);

// Projective Z measurement of one qubit; collapses and renormalizes.
int measure_z(StateVector& s, int qubit, std::mt19937_64& rng);

// <psi| rho_q |psi> for a single-qubit target state, via the 2x2 reduced
// density matrix of qubit q.
double qubit_fidelity(const StateVector& s, int qubit, const StateVector& psi);

// Bell measurement outcome: two bits, the first (z >> 1) flags a phase flip
// and the second a bit flip. The teleportation correction indexed by z is
// I, X, Z, Y for 00, 01, 10, 11.
struct BellOutcome {
    int z = 0;
    bool operator==(const BellOutcome&) const = default;
};

char correction_letter(BellOutcome out);

// Projects qubits (q1, q2) onto the Bell basis with Born-rule sampling
// driven by rng; the measured pair collapses to the observed Bell state.
BellOutcome bell_measure(StateVector& s, int q1, int q2, std::mt19937_64& rng);

// Standard teleportation of qubit src through the EPR pair (epr_a, epr_b):
// Bell-measures (src, epr_a), after which epr_b holds correction(z) |psi>.
// Throws when (epr_a, epr_b) is not a fresh |beta_00> pair.
BellOutcome teleport(StateVector& s, int src, int epr_a, int epr_b, std::mt19937_64& rng);

// Pauli operator on n qubits: a letter per qubit plus an exact global phase
// i^phase. Products track the phase through the single-qubit relations.
struct PauliString {
    std::vector<uint8_t> letters;  // 0=I 1=X 2=Y 3=Z, entry k acts on qubit k
    int phase = 0;                 // phase is i^phase, 0..3

    bool operator==(const PauliString&) const = default;
};

PauliString pauli_identity(int n);
PauliString pauli_mul(const PauliString& a, const PauliString& b);
bool pauli_commutes(const PauliString& a, const PauliString& b);
std::string pauli_to_string(const PauliString& p);  // e.g. "+XZ", "-iYI"
// Applies the operator (including its phase) to qubits first_qubit ..
// first_qubit + letters.size() - 1.
void apply_pauli(StateVector& s, const PauliString& p, int first_qubit = 0);

}  // namespace gh
