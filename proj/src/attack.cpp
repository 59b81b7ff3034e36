#include "gh/attack.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace gh {

namespace {

PauliString outcome_pauli(BellOutcome out) {
    PauliString p = pauli_identity(1);
    constexpr uint8_t letter[4] = {0, 1, 3, 2};  // I X Z Y in sigma numbering
    p.letters[0] = letter[out.z & 3];
    return p;
}

size_t hop_count(const WaterPath& path) { return (path.verts.size() - 1) / 2; }

PauliString compose_path_correction(const std::vector<BellOutcome>& outcomes,
                                    size_t hops) {
    PauliString corr = pauli_identity(1);
    for (size_t i = 0; i < hops; i++) corr = pauli_mul(outcome_pauli(outcomes[i]), corr);
    return corr;
}

// All EPR pairs for s pipes: qubit 2k and 2k+1 of this substate form pair k.
StateVector epr_pairs(int s) {
    StateVector st;
    st.qubit_count = 2 * s;
    st.amp.assign(1ull << (2 * s), 0.0);
    double a = std::pow(0.5, s / 2.0);
    for (uint32_t pattern = 0; pattern < (1u << s); pattern++) {
        uint64_t idx = 0;
        for (int k = 0; k < s; k++)
            if (pattern >> k & 1) idx |= 3ull << (2 * s - 2 - 2 * k);
        st.amp[idx] = a;
    }
    return st;
}

struct CoreResult {
    Side side = Side::alice;
    int exit_qubit = 0;
    PauliString correction;
    std::vector<BellOutcome> path_outcomes;
};

// Bell-measures every hose connection of both players on st (input qubit at
// input_qubit, pipe halves from base on) and collects the path outcomes.
CoreResult run_attack(StateVector& st, const GardenHoseGame& g, uint32_t x, uint32_t y,
                      int input_qubit, int base, std::mt19937_64& rng) {
    auto half = [base](int pipe, Side side) {
        return base + 2 * (pipe - 1) + (side == Side::bob ? 1 : 0);
    };

    std::map<std::tuple<int, int, int>, BellOutcome> measured;  // (side, u, v)
    Matching ma = g.alice(x), mb = g.bob(y);
    for (auto [u, v] : ma.edges) {
        int q1 = u == 0 ? input_qubit : half(u, Side::alice);
        measured[{0, u, v}] = bell_measure(st, q1, half(v, Side::alice), rng);
    }
    for (auto [u, v] : mb.edges)
        measured[{1, u, v}] = bell_measure(st, half(u, Side::bob), half(v, Side::bob), rng);

    CoreResult out;
    WaterPath path = flow(g, x, y);
    out.side = path.terminal();
    for (size_t i = 0; i + 1 < path.verts.size(); i += 2) {
        PathVertex from = path.verts[i], to = path.verts[i + 1];
        int u = std::min(from.v, to.v), v = std::max(from.v, to.v);
        out.path_outcomes.push_back(measured.at({from.side == Side::bob ? 1 : 0, u, v}));
    }
    out.correction = compose_path_correction(out.path_outcomes, out.path_outcomes.size());
    out.exit_qubit = path.verts.size() == 1
                         ? input_qubit
                         : half(path.verts.back().v, path.verts.back().side);
    return out;
}

}  // namespace

FrameAttack pauli_frame_attack(const GardenHoseGame& g, uint32_t x, uint32_t y,
                               const std::vector<BellOutcome>& outcomes) {
    FrameAttack out;
    out.path = flow(g, x, y);
    out.side = out.path.terminal();
    size_t hops = hop_count(out.path);
    if (outcomes.size() < hops)
        throw std::invalid_argument("need one Bell outcome per hose connection on the path");
    out.correction = compose_path_correction(outcomes, hops);
    return out;
}

AttackReport statevector_attack(const GardenHoseGame& g, uint32_t x, uint32_t y,
                                const StateVector& psi, std::mt19937_64& rng) {
    check_state(psi);
    if (psi.qubit_count != 1) throw std::invalid_argument("input must be one qubit");
    if (1 + 2 * g.s > kQubitCap)
        throw std::invalid_argument("game needs more qubits than the simulator cap");

    StateVector st = tensor(psi, epr_pairs(g.s));
    CoreResult core = run_attack(st, g, x, y, 0, 1, rng);
    apply_pauli(st, core.correction, core.exit_qubit);

    AttackReport report;
    report.side = core.side;
    report.correction = core.correction;
    report.path_outcomes = core.path_outcomes;
    report.fidelity = qubit_fidelity(st, core.exit_qubit, psi);
    return report;
}

ProverHook honest_prover(const BooleanFunction& f) {
    return [f](StateVector st, uint32_t x, uint32_t y, std::mt19937_64&) {
        return Delivery{std::move(st), 1, f(x, y) ? Side::bob : Side::alice};
    };
}

ProverHook naive_measure_prover(const BooleanFunction& f) {
    return [f](StateVector st, uint32_t x, uint32_t y, std::mt19937_64& rng) {
        measure_z(st, 1, rng);
        return Delivery{std::move(st), 1, f(x, y) ? Side::bob : Side::alice};
    };
}

ProverHook game_attack_prover(const GardenHoseGame& g) {
    return [g](StateVector st, uint32_t x, uint32_t y, std::mt19937_64& rng) {
        if (st.qubit_count + 2 * g.s > kQubitCap)
            throw std::invalid_argument("game needs more qubits than the simulator cap");
        StateVector joint = tensor(st, epr_pairs(g.s));
        CoreResult core = run_attack(joint, g, x, y, 1, st.qubit_count, rng);
        apply_pauli(joint, core.correction, core.exit_qubit);
        return Delivery{std::move(joint), core.exit_qubit, core.side};
    };
}

bool pv_qubit_round(const BooleanFunction& f, uint32_t x, uint32_t y,
                    const ProverHook& prover, std::mt19937_64& rng) {
    StateVector pair = epr_pairs(1);  // qubit 0 stays with the verifier
    Delivery d = prover(std::move(pair), x, y, rng);
    if ((d.side == Side::bob) != f(x, y)) return false;
    if (rng() & 1) {  // shared basis choice: computational or Hadamard
        apply_hadamard(d.state, 0);
        apply_hadamard(d.state, d.qubit);
    }
    return measure_z(d.state, 0, rng) == measure_z(d.state, d.qubit, rng);
}

}  // namespace gh
