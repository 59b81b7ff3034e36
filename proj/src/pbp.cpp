#include "gh/pbp.hpp"

#include <memory>
#include <stdexcept>

#include "gh/bits.hpp"

namespace gh {

Perm eval_program(const Program& p, uint32_t z) {
    Perm acc;
    for (const Instruction& ins : p.instrs) {
        if (ins.index < 1 || ins.index > p.input_len)
            throw std::invalid_argument("instruction index out of range");
        acc = acc * (bit_at(z, p.input_len, ins.index) ? ins.on_true : ins.on_false);
    }
    return acc;
}

Program conjugate_output(const Program& p, const Perm& mu, const Perm& target) {
    if (p.instrs.empty()) throw std::invalid_argument("cannot conjugate an empty program");
    if (!target.is_five_cycle()) throw std::invalid_argument("conjugation target must be a five-cycle");
    if (mu == target) return p;
    Perm theta = conjugator(mu, target);
    Perm theta_inv = theta.inverse();
    Program r = p;
    r.instrs.front().on_true = theta * r.instrs.front().on_true;
    r.instrs.front().on_false = theta * r.instrs.front().on_false;
    r.instrs.back().on_true = r.instrs.back().on_true * theta_inv;
    r.instrs.back().on_false = r.instrs.back().on_false * theta_inv;
    return r;
}

Program negate_program(const Program& p, const Perm& mu, const Perm& target) {
    if (p.instrs.empty()) throw std::invalid_argument("cannot negate an empty program");
    if (!mu.is_five_cycle() || !target.is_five_cycle())
        throw std::invalid_argument("negation needs five-cycle outputs");
    Perm mu_inv = mu.inverse();
    Program r = p;
    r.instrs.back().on_true = r.instrs.back().on_true * mu_inv;
    r.instrs.back().on_false = r.instrs.back().on_false * mu_inv;
    return conjugate_output(r, mu_inv, target);
}

namespace {

// compile gate `id` into a program evaluating to target iff the gate is 1
Program compile_gate(const Circuit& c, int id, const Perm& target, int input_len) {
    static const Perm mu1 = five_cycle({1, 2, 3, 4, 5});
    static const Perm mu2 = five_cycle({1, 3, 5, 4, 2});
    static const Perm commutator = mu1 * mu2 * mu1.inverse() * mu2.inverse();  // (1 3 2 5 4)

    const Gate& g = c.gates[id];
    switch (g.kind) {
        case GateKind::input:
            return {input_len, {Instruction{g.input_index, target, Perm{}}}};
        case GateKind::not_gate:
            return negate_program(compile_gate(c, g.a, target, input_len), target, target);
        case GateKind::and_gate:
        case GateKind::or_gate: {
            Program p1 = compile_gate(c, g.a, mu1, input_len);
            Program p2 = compile_gate(c, g.b, mu2, input_len);
            if (g.kind == GateKind::or_gate) {  // a OR b = NOT(NOT a AND NOT b)
                p1 = negate_program(p1, mu1, mu1);
                p2 = negate_program(p2, mu2, mu2);
            }
            Program p1i = conjugate_output(p1, mu1, mu1.inverse());
            Program p2i = conjugate_output(p2, mu2, mu2.inverse());
            Program all{input_len, {}};
            all.instrs.reserve(2 * (p1.instrs.size() + p2.instrs.size()));
            for (const Program* part : {&p1, &p2, &p1i, &p2i})
                all.instrs.insert(all.instrs.end(), part->instrs.begin(), part->instrs.end());
            // `all` evaluates to the commutator exactly when both parts are
            // true; for OR the parts were negated, so undo De Morgan
            if (g.kind == GateKind::or_gate) return negate_program(all, commutator, target);
            return conjugate_output(all, commutator, target);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Program compile_circuit(const Circuit& c) {
    if (c.output < 0) throw std::invalid_argument("circuit has no output");
    if (c.n < 1) throw std::invalid_argument("circuit has no inputs");
    return compile_gate(c, c.output, compile_output(), 2 * c.n);
}

AltProgram alternate(const Program& p, int n) {
    if (p.input_len != 2 * n) throw std::invalid_argument("program input length must be 2n");
    AltProgram ap;
    ap.n = n;

    for (const Instruction& ins : p.instrs)
        if (ins.index < 1 || ins.index > p.input_len)
            throw std::invalid_argument("instruction index out of range");

    // maximal same-owner runs, each one closed over its instruction slice
    auto instrs = std::make_shared<std::vector<Instruction>>(p.instrs);
    size_t i = 0;
    while (i < instrs->size()) {
        bool alice = (*instrs)[i].index <= n;
        size_t j = i;
        while (j < instrs->size() && ((*instrs)[j].index <= n) == alice) j++;
        auto value = [instrs, i, j, alice, n](uint32_t v) {
            Perm acc;
            for (size_t k = i; k < j; k++) {
                const Instruction& ins = (*instrs)[k];
                int pos = alice ? ins.index : ins.index - n;
                acc = acc * (bit_at(v, n, pos) ? ins.on_true : ins.on_false);
            }
            return acc;
        };
        ap.steps.push_back({alice ? Side::alice : Side::bob, value});
        i = j;
    }

    auto idle = [](uint32_t) { return Perm{}; };
    if (ap.steps.empty() || ap.steps.front().owner != Side::alice)
        ap.steps.insert(ap.steps.begin(), {Side::alice, idle});
    if (ap.steps.size() % 2 != 0) ap.steps.push_back({Side::bob, idle});
    return ap;
}

Perm eval_alt(const AltProgram& ap, uint32_t x, uint32_t y) {
    Perm acc;
    for (const AltInstruction& step : ap.steps)
        acc = acc * step.value(step.owner == Side::alice ? x : y);
    return acc;
}

GardenHoseGame program_to_game(const AltProgram& ap) {
    const int l = (int)ap.steps.size();
    if (l == 0 || l % 2 != 0) throw std::invalid_argument("layered program must have even length");
    for (int i = 0; i < l; i++)
        if (ap.steps[i].owner != (i % 2 == 0 ? Side::alice : Side::bob))
            throw std::invalid_argument("layers must alternate starting with Alice");

    auto steps = std::make_shared<std::vector<AltInstruction>>(ap.steps);
    auto Q = [](int layer, int k) { return 5 * (layer - 1) + k; };
    const int exit_base = 5 * l;  // exit pipes 5l+1 .. 5l+4

    GardenHoseGame g;
    g.n = ap.n;
    g.s = 5 * l + 4;
    g.alice = [steps, l, Q, exit_base](uint32_t x) {
        Matching m;
        // tap enters layer 1 where the first instruction routes position 1
        m.add(0, Q(1, (*steps)[0].value(x)(1)));
        // Alice owns instructions 3, 5, ..., so she wires even layers onward
        for (int i = 2; i + 1 <= l; i += 2) {
            Perm p = (*steps)[i].value(x);  // instruction i+1, 0-based slot i
            for (int k = 1; k <= 5; k++) m.add(Q(i, k), Q(i + 1, p(k)));
        }
        // terminate layer l: identity position stays open, the rest exit
        for (int k = 2; k <= 5; k++) m.add(Q(l, k), exit_base + k - 1);
        return m;
    };
    g.bob = [steps, l, Q](uint32_t y) {
        Matching m;
        for (int i = 1; i + 1 <= l; i += 2) {
            Perm p = (*steps)[i].value(y);  // instruction i+1
            for (int k = 1; k <= 5; k++) m.add(Q(i, k), Q(i + 1, p(k)));
        }
        return m;
    };
    return g;
}

}  // namespace gh
