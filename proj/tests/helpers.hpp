#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "gh/circuit.hpp"
#include "gh/game.hpp"

namespace gh::testing {

// Random valid games for property checks. Seeded, hand-rolled pairing
// generator: shuffle vertices, pair a random prefix.
inline GardenHoseGame random_game(std::mt19937_64& rng, int n, int s) {
    auto random_matching = [](std::mt19937_64& r, std::vector<int> verts) {
        std::shuffle(verts.begin(), verts.end(), r);
        size_t pairs = verts.empty() ? 0 : r() % (verts.size() / 2 + 1);
        Matching m;
        for (size_t i = 0; i < pairs; i++) m.add(verts[2 * i], verts[2 * i + 1]);
        return m;
    };
    std::vector<int> av(s + 1), bv(s);
    for (int i = 0; i <= s; i++) av[i] = i;
    for (int i = 1; i <= s; i++) bv[i - 1] = i;

    auto at = std::make_shared<std::vector<Matching>>();
    auto bt = std::make_shared<std::vector<Matching>>();
    for (uint32_t v = 0; v < (1u << n); v++) {
        at->push_back(random_matching(rng, av));
        bt->push_back(random_matching(rng, bv));
    }
    GardenHoseGame g;
    g.n = n;
    g.s = s;
    g.alice = [at](uint32_t x) { return (*at)[x]; };
    g.bob = [bt](uint32_t y) { return (*bt)[y]; };
    return g;
}

// Random fan-in-two circuit with AND/OR depth <= budget on n bits per
// player, with NOT gates sprinkled in (they do not count toward depth).
inline int random_gate(Circuit& c, std::mt19937_64& rng, int budget) {
    auto emit = [&c](Gate g) {
        c.gates.push_back(g);
        return (int)c.gates.size() - 1;
    };
    int id;
    if (budget == 0 || rng() % 4 == 0) {
        id = emit({GateKind::input, -1, -1, (int)(rng() % (2 * c.n)) + 1});
    } else {
        GateKind kind = rng() % 2 ? GateKind::and_gate : GateKind::or_gate;
        int a = random_gate(c, rng, budget - 1);
        int b = random_gate(c, rng, budget - 1);
        id = emit({kind, a, b, 0});
    }
    if (rng() % 3 == 0) id = emit({GateKind::not_gate, id, -1, 0});
    return id;
}

inline Circuit random_circuit(std::mt19937_64& rng, int n, int depth_budget) {
    Circuit c;
    c.n = n;
    c.output = random_gate(c, rng, depth_budget);
    return c;
}

// Independent circuit evaluator used as the oracle for eval_circuit and the
// compiled programs: recursive with explicit memo, structured differently
// from the library's single-pass loop.
inline bool eval_reference(const Circuit& c, int id, uint32_t x, uint32_t y) {
    const Gate& g = c.gates[id];
    switch (g.kind) {
        case GateKind::input: {
            uint32_t v = g.input_index <= c.n ? x : y;
            int pos = g.input_index <= c.n ? g.input_index : g.input_index - c.n;
            return (v >> (c.n - pos)) & 1u;
        }
        case GateKind::not_gate: return !eval_reference(c, g.a, x, y);
        case GateKind::and_gate: return eval_reference(c, g.a, x, y) && eval_reference(c, g.b, x, y);
        case GateKind::or_gate: return eval_reference(c, g.a, x, y) || eval_reference(c, g.b, x, y);
    }
    return false;
}

inline bool eval_reference(const Circuit& c, uint32_t x, uint32_t y) {
    return eval_reference(c, c.output, x, y);
}

}  // namespace gh::testing
