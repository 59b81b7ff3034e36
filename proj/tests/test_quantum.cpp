#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "gh/attack.hpp"
#include "gh/boolfun.hpp"
#include "gh/game.hpp"
#include "gh/quantum.hpp"
#include "gh/strategies.hpp"
#include "gh/verify.hpp"

using namespace gh;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool states_close(const StateVector& a, const StateVector& b, double tol = 1e-12) {
    if (a.qubit_count != b.qubit_count || a.amp.size() != b.amp.size()) return false;
    for (size_t i = 0; i < a.amp.size(); ++i) {
        if (std::abs(a.amp[i] - b.amp[i]) > tol) return false;
    }
    return true;
}

StateVector bell00() {
    StateVector b;
    b.qubit_count = 2;
    b.amp = {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    return b;
}

StateVector ket(int qubits, uint32_t label) {
    StateVector s = zero_state(qubits);
    s.amp[0] = 0.0;
    s.amp[label] = 1.0;
    return s;
}

PauliString ps(std::vector<uint8_t> letters, int phase = 0) {
    PauliString p;
    p.letters = std::move(letters);
    p.phase = phase;
    return p;
}

// Random game on s pipes: each vertex joins the pool with probability ~0.7,
// the pool is shuffled and paired up. Together with the tap this exercises
// paths of every shape, including immediate dead ends.
Matching random_matching(int lo, int hi, std::mt19937_64& rng) {
    std::vector<int> pool;
    for (int v = lo; v <= hi; ++v) {
        if (canonical_double(rng) < 0.7) pool.push_back(v);
    }
    if (pool.size() % 2) pool.pop_back();
    for (size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng() % i]);
    Matching m;
    for (size_t i = 0; i + 1 < pool.size(); i += 2) m.add(pool[i], pool[i + 1]);
    return m;
}

GardenHoseGame random_game(int n, int s, std::mt19937_64& rng) {
    std::vector<Matching> am, bm;
    for (uint32_t x = 0; x < (1u << n); ++x) am.push_back(random_matching(0, s, rng));
    for (uint32_t y = 0; y < (1u << n); ++y) bm.push_back(random_matching(1, s, rng));
    GardenHoseGame g;
    g.n = n;
    g.s = s;
    g.alice = [am](uint32_t x) { return am[x]; };
    g.bob = [bm](uint32_t y) { return bm[y]; };
    return g;
}

}  // namespace

TEST_CASE("state basics: zero_state, tensor, check_state") {
    StateVector s = zero_state(3);
    CHECK(s.qubit_count == 3);
    CHECK(s.amp.size() == 8);
    CHECK(s.amp[0] == cplx(1.0, 0.0));
    CHECK(state_norm(s) == doctest::Approx(1.0));

    StateVector t = tensor(ket(1, 1), ket(2, 2));
    CHECK(t.qubit_count == 3);
    CHECK(t.amp[0b110] == cplx(1.0, 0.0));  // qubit 0 is the most significant bit

    CHECK_NOTHROW(check_state(t));
    t.amp[0] = 0.5;
    CHECK_THROWS_AS(check_state(t), std::invalid_argument);
    t.amp.pop_back();
    CHECK_THROWS_AS(check_state(t), std::invalid_argument);
    CHECK_THROWS_AS(zero_state(0), std::invalid_argument);
    CHECK_THROWS_AS(zero_state(31), std::invalid_argument);
}

TEST_CASE("single-qubit gates act on the right qubit with the right signs") {
    StateVector s = zero_state(2);
    apply_pauli_letter(s, 1, 'X');  // |00> -> |01>
    CHECK(states_close(s, ket(2, 1)));
    apply_pauli_letter(s, 1, 'Z');  // |01> -> -|01>
    CHECK(s.amp[1] == cplx(-1.0, 0.0));
    apply_pauli_letter(s, 0, 'Y');  // -|01> -> -i|11>
    CHECK(std::abs(s.amp[3] - cplx(0.0, -1.0)) < 1e-12);
    CHECK(state_norm(s) == doctest::Approx(1.0));

    StateVector h = zero_state(1);
    apply_hadamard(h, 0);
    CHECK(h.amp[0].real() == doctest::Approx(kInvSqrt2));
    CHECK(h.amp[1].real() == doctest::Approx(kInvSqrt2));
    apply_hadamard(h, 0);  // involution
    CHECK(states_close(h, ket(1, 0), 1e-12));

    CHECK_THROWS_AS(apply_pauli_letter(s, 5, 'X'), std::invalid_argument);
    CHECK_THROWS_AS(apply_pauli_letter(s, 0, 'Q'), std::invalid_argument);
}

TEST_CASE("canonical_double and random_qubit are deterministic per seed") {
    std::mt19937_64 a(7), b(7);
    for (int i = 0; i < 1000; ++i) {
        const double v = canonical_double(a);
        CHECK(v == canonical_double(b));
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }

    std::mt19937_64 r1(42), r2(42);
    StateVector q1 = random_qubit(r1), q2 = random_qubit(r2);
    CHECK(states_close(q1, q2, 0.0));
    CHECK(state_norm(q1) == doctest::Approx(1.0));
    // canonical global phase: leading amplitude real and non-negative
    CHECK(q1.amp[0].imag() == doctest::Approx(0.0));
    CHECK(q1.amp[0].real() >= 0.0);
}

TEST_CASE("measure_z: deterministic on basis states, fair on |+>") {
    std::mt19937_64 rng(1);
    StateVector s = ket(2, 0b10);
    CHECK(measure_z(s, 0, rng) == 1);
    CHECK(measure_z(s, 1, rng) == 0);
    CHECK(state_norm(s) == doctest::Approx(1.0));

    int ones = 0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        StateVector h = zero_state(1);
        apply_hadamard(h, 0);
        const int m = measure_z(h, 0, rng);
        ones += m;
        // collapse: the post-measurement state is the observed basis state
        CHECK(states_close(h, ket(1, static_cast<uint32_t>(m)), 1e-12));
    }
    CHECK(ones > trials / 2 - 500);
    CHECK(ones < trials / 2 + 500);
}

TEST_CASE("qubit_fidelity via the reduced density matrix") {
    StateVector psi = ket(1, 0);
    StateVector s = ket(2, 0b01);
    CHECK(qubit_fidelity(s, 0, psi) == doctest::Approx(1.0));
    CHECK(qubit_fidelity(s, 1, psi) == doctest::Approx(0.0));

    StateVector plus = zero_state(1);
    apply_hadamard(plus, 0);
    CHECK(qubit_fidelity(s, 0, plus) == doctest::Approx(0.5));

    // a maximally entangled half looks maximally mixed to any target
    StateVector b = bell00();
    CHECK(qubit_fidelity(b, 0, psi) == doctest::Approx(0.5));
    CHECK(qubit_fidelity(b, 1, plus) == doctest::Approx(0.5));

    std::mt19937_64 rng(3);
    StateVector r = random_qubit(rng);
    CHECK(qubit_fidelity(r, 0, r) == doctest::Approx(1.0));
}

TEST_CASE("bell_measure identifies each Bell state with certainty") {
    std::mt19937_64 rng(5);
    // beta_z from beta_00 by acting on the second half: z's low bit flips
    // the parity (X), its high bit the sign (Z).
    for (int z = 0; z < 4; ++z) {
        StateVector s = bell00();
        if (z & 1) apply_pauli_letter(s, 1, 'X');
        if (z & 2) apply_pauli_letter(s, 1, 'Z');
        const BellOutcome out = bell_measure(s, 0, 1, rng);
        CHECK(out.z == z);
        CHECK(state_norm(s) == doctest::Approx(1.0));
    }
    CHECK(correction_letter(BellOutcome{0}) == 'I');
    CHECK(correction_letter(BellOutcome{1}) == 'X');
    CHECK(correction_letter(BellOutcome{2}) == 'Z');
    CHECK(correction_letter(BellOutcome{3}) == 'Y');
}

TEST_CASE("bell_measure on |00>: half beta_00, half beta_10, collapses cleanly") {
    std::mt19937_64 rng(11);
    std::set<int> seen;
    for (int t = 0; t < 200; ++t) {
        StateVector s = ket(2, 0);
        const BellOutcome out = bell_measure(s, 0, 1, rng);
        CHECK((out.z == 0 || out.z == 2));
        seen.insert(out.z);
        // collapsed onto the observed Bell state: re-measuring repeats it
        std::mt19937_64 again(t);
        CHECK(bell_measure(s, 0, 1, again).z == out.z);
    }
    CHECK(seen.size() == 2);
}

TEST_CASE("bell_measure respects qubit order in larger registers") {
    std::mt19937_64 rng(13);
    // |psi> beta_00 on qubits (1, 2): measuring that pair is deterministic
    StateVector s = tensor(random_qubit(rng), bell00());
    CHECK(bell_measure(s, 1, 2, rng).z == 0);
    CHECK_THROWS_AS(bell_measure(s, 1, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(bell_measure(s, 0, 3, rng), std::invalid_argument);
}

TEST_CASE("teleport moves the state up to the advertised correction") {
    std::set<int> outcomes_seen;
    for (int seed = 0; seed < 40; ++seed) {
        std::mt19937_64 rng(seed);
        StateVector psi = random_qubit(rng);
        StateVector st = tensor(psi, bell00());
        const BellOutcome z = teleport(st, 0, 1, 2, rng);
        outcomes_seen.insert(z.z);
        apply_pauli_letter(st, 2, correction_letter(z));
        CHECK(qubit_fidelity(st, 2, psi) == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK(outcomes_seen.size() == 4);
}

TEST_CASE("teleport rejects a used or missing EPR pair") {
    std::mt19937_64 rng(17);
    StateVector psi = random_qubit(rng);

    StateVector stale = tensor(psi, bell00());
    apply_hadamard(stale, 1);
    CHECK_THROWS_AS(teleport(stale, 0, 1, 2, rng), std::invalid_argument);

    // a pair that was already consumed by one teleport
    StateVector twice = tensor(tensor(psi, random_qubit(rng)), bell00());
    teleport(twice, 0, 2, 3, rng);
    CHECK_THROWS_AS(teleport(twice, 1, 2, 3, rng), std::invalid_argument);

    StateVector ok = tensor(psi, bell00());
    CHECK_THROWS_AS(teleport(ok, 0, 0, 2, rng), std::invalid_argument);
    CHECK_THROWS_AS(teleport(ok, 0, 1, 3, rng), std::invalid_argument);
}

TEST_CASE("pauli algebra: products, phases, commutation, printing") {
    const PauliString X = ps({1}), Y = ps({2}), Z = ps({3}), I = ps({0});

    CHECK(pauli_mul(X, Y) == ps({3}, 1));   // XY = iZ
    CHECK(pauli_mul(Y, X) == ps({3}, 3));   // YX = -iZ
    CHECK(pauli_mul(Y, Z) == ps({1}, 1));   // YZ = iX
    CHECK(pauli_mul(Z, X) == ps({2}, 1));   // ZX = iY
    CHECK(pauli_mul(X, X) == I);
    CHECK(pauli_mul(I, Y) == Y);

    CHECK(pauli_commutes(X, X));
    CHECK_FALSE(pauli_commutes(X, Z));
    CHECK(pauli_commutes(ps({1, 1}), ps({3, 3})));  // XX vs ZZ: two sign flips
    CHECK(pauli_commutes(ps({1, 0}), ps({0, 3})));
    CHECK_FALSE(pauli_commutes(ps({1, 0}), ps({3, 3})));

    CHECK(pauli_to_string(pauli_identity(2)) == "+II");
    CHECK(pauli_to_string(ps({2, 0}, 1)) == "+iYI");
    CHECK(pauli_to_string(ps({1, 3}, 2)) == "-XZ");
    CHECK(pauli_to_string(ps({3, 2}, 3)) == "-iZY");

    CHECK_THROWS_AS(pauli_mul(ps({1}), ps({1, 1})), std::invalid_argument);
}

TEST_CASE("pauli products associate and match their action on states") {
    std::mt19937_64 rng(2026);
    auto random_pauli = [&rng](int n) {
        PauliString p;
        for (int k = 0; k < n; ++k) p.letters.push_back(rng() % 4);
        p.phase = rng() % 4;
        return p;
    };
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const PauliString a = random_pauli(n), b = random_pauli(n), c = random_pauli(n);
        CHECK(pauli_mul(pauli_mul(a, b), c) == pauli_mul(a, pauli_mul(b, c)));

        StateVector s = random_qubit(rng);
        for (int k = 1; k < n; ++k) s = tensor(s, random_qubit(rng));
        StateVector lhs = s;
        apply_pauli(lhs, a);
        apply_pauli(lhs, b);
        StateVector rhs = s;
        apply_pauli(rhs, pauli_mul(b, a));  // b after a
        CHECK(states_close(lhs, rhs, 1e-12));
    }
}

TEST_CASE("apply_pauli honors the first_qubit offset") {
    std::mt19937_64 rng(8);
    StateVector s = tensor(tensor(random_qubit(rng), random_qubit(rng)), random_qubit(rng));
    StateVector t = s;
    apply_pauli(s, ps({1}), 2);
    apply_pauli_letter(t, 2, 'X');
    CHECK(states_close(s, t, 0.0));
    CHECK_THROWS_AS(apply_pauli(s, ps({1, 1}), 2), std::invalid_argument);
}

TEST_CASE("frame attack: trivial outcomes give the identity correction") {
    const GardenHoseGame g = build_xor();
    for (uint32_t x = 0; x < 2; ++x) {
        for (uint32_t y = 0; y < 2; ++y) {
            const WaterPath p = flow(g, x, y);
            const size_t hops = (p.verts.size() - 1) / 2;
            const FrameAttack fa =
                pauli_frame_attack(g, x, y, std::vector<BellOutcome>(hops, BellOutcome{0}));
            CHECK(fa.correction == pauli_identity(1));
            CHECK((fa.side == Side::bob) == (x != y));
            CHECK(fa.path.verts == p.verts);
        }
    }
}

TEST_CASE("frame attack: one hop, one teleport correction") {
    // (1,0): Alice taps pipe 2, Bob leaves it unmatched, so the qubit makes
    // exactly one teleport hop and lands on Bob's side (xor = 1).
    const GardenHoseGame g = build_xor();
    REQUIRE(flow(g, 1, 0).verts.size() == 3);
    const FrameAttack fa = pauli_frame_attack(g, 1, 0, {{1}});
    CHECK(fa.correction == ps({1}));  // outcome 01 -> X, as in plain teleportation
    CHECK(fa.side == Side::bob);
}

TEST_CASE("frame attack: corrections compose hop by hop, later on the left") {
    const GardenHoseGame g = build_eq(1);
    const WaterPath p = flow(g, 0, 0);
    const size_t hops = (p.verts.size() - 1) / 2;
    REQUIRE(hops == 3);  // tap, across, and back once more

    std::vector<BellOutcome> zs = {{1}, {2}, {3}};  // X, Z, then Y
    const FrameAttack fa = pauli_frame_attack(g, 0, 0, zs);
    PauliString want = pauli_identity(1);
    want = pauli_mul(ps({1}), want);
    want = pauli_mul(ps({3}), want);
    want = pauli_mul(ps({2}), want);
    CHECK(fa.correction == want);

    CHECK_THROWS_AS(pauli_frame_attack(g, 0, 0, {{1}, {2}}), std::invalid_argument);
    // extra outcomes beyond the path are ignored
    zs.push_back({1});
    CHECK(pauli_frame_attack(g, 0, 0, zs).correction == want);
}

TEST_CASE("statevector attack recovers the qubit exactly on the named games") {
    std::mt19937_64 rng(20260814);
    const struct {
        GardenHoseGame game;
        BooleanFunction fn;
    } cases[] = {
        {build_xor(), bf_xor(1)},
        {build_eq(1), bf_eq(1)},
        {build_ip(1), bf_ip(1)},
    };
    for (const auto& c : cases) {
        REQUIRE(computes(c.game, c.fn).ok);
        for (uint32_t x = 0; x < 2; ++x) {
            for (uint32_t y = 0; y < 2; ++y) {
                const StateVector psi = random_qubit(rng);
                const AttackReport r = statevector_attack(c.game, x, y, psi, rng);
                CHECK(r.fidelity >= 1.0 - 1e-10);
                CHECK((r.side == Side::bob) == c.fn(x, y));
                CHECK(r.path_outcomes.size() == (flow(c.game, x, y).verts.size() - 1) / 2);
            }
        }
    }
}

TEST_CASE("statevector attack agrees with the symbolic frame") {
    std::mt19937_64 rng(99);
    const GardenHoseGame g = build_eq(1);
    for (uint32_t x = 0; x < 2; ++x) {
        for (uint32_t y = 0; y < 2; ++y) {
            for (int rep = 0; rep < 5; ++rep) {
                const AttackReport r = statevector_attack(g, x, y, random_qubit(rng), rng);
                const FrameAttack fa = pauli_frame_attack(g, x, y, r.path_outcomes);
                CHECK(fa.correction == r.correction);
                CHECK(fa.side == r.side);
            }
        }
    }
}

TEST_CASE("statevector attack works on arbitrary random games") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 12; ++trial) {
        const int s = 2 + static_cast<int>(rng() % 4);  // 2..5 pipes
        const GardenHoseGame g = random_game(1, s, rng);
        REQUIRE(validate_game(g).ok);
        for (uint32_t x = 0; x < 2; ++x) {
            for (uint32_t y = 0; y < 2; ++y) {
                const StateVector psi = random_qubit(rng);
                const AttackReport r = statevector_attack(g, x, y, psi, rng);
                CHECK(r.fidelity >= 1.0 - 1e-10);
                CHECK(r.side == flow(g, x, y).terminal());
            }
        }
    }
}

TEST_CASE("statevector attack input validation") {
    std::mt19937_64 rng(1);
    GardenHoseGame wide;  // 1 + 2s qubits would exceed the register cap
    wide.n = 1;
    wide.s = 12;
    wide.alice = [](uint32_t) { return Matching{}; };
    wide.bob = [](uint32_t) { return Matching{}; };
    CHECK_THROWS_AS(statevector_attack(wide, 0, 0, random_qubit(rng), rng),
                    std::invalid_argument);

    CHECK_THROWS_AS(statevector_attack(build_xor(), 0, 0, bell00(), rng),
                    std::invalid_argument);
}

TEST_CASE("qubit-routing round: honest prover is always accepted") {
    const BooleanFunction f = bf_xor(1);
    const ProverHook honest = honest_prover(f);
    for (int seed = 0; seed < 25; ++seed) {
        std::mt19937_64 rng(seed);
        for (uint32_t x = 0; x < 2; ++x) {
            for (uint32_t y = 0; y < 2; ++y) {
                CHECK(pv_qubit_round(f, x, y, honest, rng));
            }
        }
    }
}

TEST_CASE("qubit-routing round: the EPR-pair attack is perfect") {
    const BooleanFunction f = bf_eq(2);
    const GardenHoseGame g = build_generic(f);
    REQUIRE(computes(g, f).ok);
    const ProverHook attack = game_attack_prover(g);
    for (int seed = 0; seed < 5; ++seed) {
        std::mt19937_64 rng(100 + seed);
        for (uint32_t x = 0; x < 4; ++x) {
            for (uint32_t y = 0; y < 4; ++y) {
                CHECK(pv_qubit_round(f, x, y, attack, rng));
            }
        }
    }
}

TEST_CASE("qubit-routing round: measure-and-resend passes three times in four") {
    const BooleanFunction f = bf_xor(1);
    const ProverHook naive = naive_measure_prover(f);
    std::mt19937_64 rng(31337);
    const int trials = 10000;
    int passes = 0;
    for (int t = 0; t < trials; ++t) {
        const uint32_t x = rng() & 1, y = rng() & 1;
        passes += pv_qubit_round(f, x, y, naive, rng);
    }
    const double rate = static_cast<double>(passes) / trials;
    CHECK(rate > 0.70);
    CHECK(rate < 0.80);
}

TEST_CASE("game attack prover refuses an oversized register") {
    GardenHoseGame wide;
    wide.n = 1;
    wide.s = 12;
    wide.alice = [](uint32_t) { return Matching{}; };
    wide.bob = [](uint32_t) { return Matching{}; };
    const ProverHook attack = game_attack_prover(wide);
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(pv_qubit_round(bf_xor(1), 0, 0, attack, rng), std::invalid_argument);
}
