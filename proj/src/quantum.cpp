#include "gh/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gh {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kTau = 6.28318530717958647692;

uint64_t index_bit(const StateVector& s, int qubit) {
    return 1ull << (s.qubit_count - 1 - qubit);
}

void check_qubit(const StateVector& s, int qubit) {
    if (qubit < 0 || qubit >= s.qubit_count)
        throw std::invalid_argument("qubit index out of range");
}

void renormalize(StateVector& s, double p) {
    double inv = 1.0 / std::sqrt(p);
    for (cplx& a : s.amp) a *= inv;
}

}  // namespace

StateVector zero_state(int qubits) {
    if (qubits < 1 || qubits > 30) throw std::invalid_argument("qubit count out of range");
    StateVector s;
    s.qubit_count = qubits;
    s.amp.assign(1ull << qubits, 0.0);
    s.amp[0] = 1.0;
    return s;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out;
    out.qubit_count = a.qubit_count + b.qubit_count;
    out.amp.resize(a.amp.size() * b.amp.size());
    for (size_t i = 0; i < a.amp.size(); i++)
        for (size_t j = 0; j < b.amp.size(); j++)
            out.amp[i * b.amp.size() + j] = a.amp[i] * b.amp[j];
    return out;
}

double state_norm(const StateVector& s) {
    double n2 = 0;
    for (const cplx& a : s.amp) n2 += std::norm(a);
    return std::sqrt(n2);
}

void check_state(const StateVector& s) {
    if (s.qubit_count < 1 || s.amp.size() != (1ull << s.qubit_count))
        throw std::invalid_argument("state dimension is not 2^qubits");
    if (std::abs(state_norm(s) - 1.0) > kNormTol)
        throw std::invalid_argument("state is not normalized");
}

double canonical_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

StateVector random_qubit(std::mt19937_64& rng) {
    // Box-Muller on deterministic uniforms.
    auto gaussian = [&rng]() {
        double u = 1.0 - canonical_double(rng);
        double v = canonical_double(rng);
        return std::sqrt(-2.0 * std::log(u)) * std::cos(kTau * v);
    };
    StateVector s;
    s.qubit_count = 1;
    s.amp = {cplx(gaussian(), gaussian()), cplx(gaussian(), gaussian())};
    double n = state_norm(s);
    cplx lead = std::abs(s.amp[0]) > 1e-9 ? s.amp[0] : s.amp[1];
    cplx fix = std::conj(lead) / std::abs(lead) / n;
    for (cplx& a : s.amp) a *= fix;
    return s;
}

void apply_pauli_letter(StateVector& s, int qubit, char letter) {
    check_qubit(s, qubit);
    uint64_t bit = index_bit(s, qubit);
    switch (letter) {
        case 'I':
            return;
        case 'X':
            for (uint64_t i = 0; i < s.amp.size(); i++)
                if (!(i & bit)) std::swap(s.amp[i], s.amp[i | bit]);
            return;
        case 'Y':  // Y|0> = i|1>, Y|1> = -i|0>
            for (uint64_t i = 0; i < s.amp.size(); i++)
                if (!(i & bit)) {
                    cplx lo = s.amp[i];
                    s.amp[i] = cplx(0, -1) * s.amp[i | bit];
                    s.amp[i | bit] = cplx(0, 1) * lo;
                }
            return;
        case 'Z':
            for (uint64_t i = 0; i < s.amp.size(); i++)
                if (i & bit) s.amp[i] = -s.amp[i];
            return;
        default:
            throw std::invalid_argument("unknown Pauli letter");
    }
}

void apply_hadamard(StateVector& s, int qubit) {
    check_qubit(s, qubit);
    uint64_t bit = index_bit(s, qubit);
    for (uint64_t i = 0; i < s.amp.size(); i++)
        if (!(i & bit)) {
            cplx lo = s.amp[i], hi = s.amp[i | bit];
            s.amp[i] = (lo + hi) * kInvSqrt2;
            s.amp[i | bit] = (lo - hi) * kInvSqrt2;
        }
}

int measure_z(StateVector& s, int qubit, std::mt19937_64& rng) {
    check_qubit(s, qubit);
    uint64_t bit = index_bit(s, qubit);
    double p1 = 0;
    for (uint64_t i = 0; i < s.amp.size(); i++)
        if (i & bit) p1 += std::norm(s.amp[i]);
    int outcome = canonical_double(rng) < p1 ? 1 : 0;
    for (uint64_t i = 0; i < s.amp.size(); i++)
        if (((i & bit) != 0) != (outcome == 1)) s.amp[i] = 0;
    renormalize(s, outcome ? p1 : 1.0 - p1);
    return outcome;
}

double qubit_fidelity(const StateVector& s, int qubit, const StateVector& psi) {
    check_qubit(s, qubit);
    if (psi.qubit_count != 1) throw std::invalid_argument("target must be one qubit");
    uint64_t bit = index_bit(s, qubit);
    cplx rho[2][2] = {};
    for (uint64_t i = 0; i < s.amp.size(); i++) {
        int a = (i & bit) ? 1 : 0;
        // pair i with the index whose qubit value is flipped/kept
        rho[a][a] += s.amp[i] * std::conj(s.amp[i]);
        uint64_t j = i ^ bit;
        rho[a][a ^ 1] += s.amp[i] * std::conj(s.amp[j]);
    }
    cplx f = 0;
    for (int a = 0; a < 2; a++)
        for (int b = 0; b < 2; b++) f += std::conj(psi.amp[a]) * rho[a][b] * psi.amp[b];
    return f.real();
}

char correction_letter(BellOutcome out) {
    constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[out.z & 3];
}

BellOutcome bell_measure(StateVector& s, int q1, int q2, std::mt19937_64& rng) {
    check_qubit(s, q1);
    check_qubit(s, q2);
    if (q1 == q2) throw std::invalid_argument("bell_measure needs two distinct qubits");
    uint64_t b1 = index_bit(s, q1), b2 = index_bit(s, q2);

    // Bell components: z = (phase bit, flip bit). The |beta_z> expansion of
    // the pair values (v1, v2) has coefficient sign[z] / sqrt(2) when
    // v1 xor v2 matches the flip bit, zero otherwise; the sign is -1 only
    // for the phase-flipped combination with v1 = 1.
    auto component = [&](uint64_t i, int z) -> cplx {
        int v1 = (i & b1) ? 1 : 0, v2 = (i & b2) ? 1 : 0;
        if ((v1 ^ v2) != (z & 1)) return 0.0;
        double sign = ((z >> 1) && v1) ? -1.0 : 1.0;
        return sign * kInvSqrt2;
    };

    double p[4] = {};
    for (int z = 0; z < 4; z++) {
        // project: A_z(rest) = sum over pair values of conj(component)*amp
        for (uint64_t i = 0; i < s.amp.size(); i++) {
            if ((i & b1) || (i & b2)) continue;  // enumerate rest via v1=v2=0 slots
            cplx a = 0;
            for (uint64_t v1 : {uint64_t(0), b1})
                for (uint64_t v2 : {uint64_t(0), b2})
                    a += component(i | v1 | v2, z) * s.amp[i | v1 | v2];
            p[z] += std::norm(a);
        }
    }

    double u = canonical_double(rng), acc = 0;
    int z = static_cast<int>(std::max_element(p, p + 4) - p);  // float-sum fallback
    for (int k = 0; k < 4; k++) {
        acc += p[k];
        if (u < acc) {
            z = k;
            break;
        }
    }

    // Collapse: pair goes to |beta_z>, rest keeps the projected amplitude.
    std::vector<cplx> out(s.amp.size(), 0.0);
    for (uint64_t i = 0; i < s.amp.size(); i++) {
        if ((i & b1) || (i & b2)) continue;
        cplx a = 0;
        for (uint64_t v1 : {uint64_t(0), b1})
            for (uint64_t v2 : {uint64_t(0), b2})
                a += component(i | v1 | v2, z) * s.amp[i | v1 | v2];
        for (uint64_t v1 : {uint64_t(0), b1})
            for (uint64_t v2 : {uint64_t(0), b2})
                out[i | v1 | v2] = component(i | v1 | v2, z) * a;
    }
    s.amp = std::move(out);
    renormalize(s, p[z]);
    return {z};
}

BellOutcome teleport(StateVector& s, int src, int epr_a, int epr_b, std::mt19937_64& rng) {
    check_qubit(s, src);
    check_qubit(s, epr_a);
    check_qubit(s, epr_b);
    if (src == epr_a || src == epr_b || epr_a == epr_b)
        throw std::invalid_argument("teleport needs three distinct qubits");

    // The pair must be exactly |beta_00> (in product with the rest), i.e.
    // the probability of Bell outcome 00 on it must be 1.
    uint64_t ba = index_bit(s, epr_a), bb = index_bit(s, epr_b);
    double p00 = 0;
    for (uint64_t i = 0; i < s.amp.size(); i++) {
        if ((i & ba) || (i & bb)) continue;
        cplx a = (s.amp[i] + s.amp[i | ba | bb]) * kInvSqrt2;
        p00 += std::norm(a);
    }
    if (std::abs(p00 - 1.0) > 1e-9)
        throw std::invalid_argument("teleport needs a fresh EPR pair on (epr_a, epr_b)");

    return bell_measure(s, src, epr_a, rng);
}

PauliString pauli_identity(int n) {
    PauliString p;
    p.letters.assign(n, 0);
    return p;
}

namespace {

// letter product: sigma_a sigma_b = i^phase_table sigma_(a xor-ish b)
// computed from XY=iZ, YZ=iX, ZX=iY and squares = I.
void letter_mul(uint8_t a, uint8_t b, uint8_t& out, int& phase) {
    if (a == 0 || b == 0) {
        out = a | b;
        return;
    }
    if (a == b) {
        out = 0;
        return;
    }
    out = static_cast<uint8_t>(a ^ b);  // X=1 Y=2 Z=3: xor gives the third letter
    bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    phase = (phase + (forward ? 1 : 3)) & 3;
}

}  // namespace

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    if (a.letters.size() != b.letters.size())
        throw std::invalid_argument("pauli length mismatch");
    PauliString out;
    out.letters.resize(a.letters.size());
    out.phase = (a.phase + b.phase) & 3;
    for (size_t k = 0; k < a.letters.size(); k++)
        letter_mul(a.letters[k], b.letters[k], out.letters[k], out.phase);
    return out;
}

bool pauli_commutes(const PauliString& a, const PauliString& b) {
    if (a.letters.size() != b.letters.size())
        throw std::invalid_argument("pauli length mismatch");
    int anti = 0;
    for (size_t k = 0; k < a.letters.size(); k++)
        anti ^= (a.letters[k] && b.letters[k] && a.letters[k] != b.letters[k]) ? 1 : 0;
    return anti == 0;
}

std::string pauli_to_string(const PauliString& p) {
    static const char* prefix[4] = {"+", "+i", "-", "-i"};
    std::string out = prefix[p.phase & 3];
    for (uint8_t l : p.letters) out += "IXYZ"[l];
    return out;
}

void apply_pauli(StateVector& s, const PauliString& p, int first_qubit) {
    for (size_t k = 0; k < p.letters.size(); k++)
        apply_pauli_letter(s, first_qubit + static_cast<int>(k), "IXYZ"[p.letters[k]]);
    static const cplx unit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    if (p.phase & 3)
        for (cplx& a : s.amp) a *= unit[p.phase & 3];
}

}  // namespace gh
