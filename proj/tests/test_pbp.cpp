#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gh/pbp.hpp"
#include "gh/verify.hpp"
#include "helpers.hpp"

using namespace gh;

static Perm random_five_cycle(std::mt19937_64& rng) {
    std::array<int, 5> c{1, 2, 3, 4, 5};
    std::shuffle(c.begin(), c.end(), rng);
    return five_cycle(c);
}

TEST_CASE("permutation basics and the frozen commutator identity") {
    Perm a = five_cycle({1, 2, 3, 4, 5});
    CHECK(a(1) == 2);
    CHECK(a(5) == 1);
    CHECK(a.is_five_cycle());
    CHECK(!Perm{}.is_five_cycle());
    CHECK(Perm{}.is_identity());
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.cycle_string() == "(1 2 3 4 5)");
    CHECK(Perm{}.cycle_string() == "e");

    // left-to-right composition: (p*q)(v) = q(p(v))
    Perm b = five_cycle({1, 3, 5, 4, 2});
    CHECK((a * b)(1) == b(a(1)));

    // the AND-gate commutator: (12345)(13542)(54321)(24531) = (13254)
    CHECK(a.inverse() == five_cycle({5, 4, 3, 2, 1}));
    CHECK(b.inverse() == five_cycle({2, 4, 5, 3, 1}));
    Perm product = a * b * a.inverse() * b.inverse();
    CHECK(product == five_cycle({1, 3, 2, 5, 4}));
    CHECK(product.is_five_cycle());
}

TEST_CASE("conjugator solves target = theta mu theta^-1") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; trial++) {
        Perm mu = random_five_cycle(rng);
        Perm target = random_five_cycle(rng);
        Perm theta = conjugator(mu, target);
        CHECK(theta * mu * theta.inverse() == target);
    }
    CHECK_THROWS(conjugator(Perm{}, five_cycle({1, 2, 3, 4, 5})));
}

TEST_CASE("eval_program multiplies instruction values in order") {
    Program empty{2, {}};
    CHECK(eval_program(empty, 0).is_identity());

    Perm a = five_cycle({1, 2, 3, 4, 5}), b = five_cycle({1, 3, 5, 4, 2});
    Program p{2, {{1, a, Perm{}}, {2, b, a}}};
    // z packs (x||y) MSB-first: z=2 is x=1,y=0
    CHECK(eval_program(p, 2) == a * a);
    CHECK(eval_program(p, 3) == a * b);
    CHECK(eval_program(p, 0) == a);  // bit1=0 -> e, bit2=0 -> a
    CHECK(eval_program(p, 1) == b);

    Program bad{2, {{3, a, Perm{}}}};
    CHECK_THROWS(eval_program(bad, 0));
}

// single-instruction predicate programs: evaluate to mu iff bit j of z is set
static Program bit_program(int input_len, int j, const Perm& mu) {
    return {input_len, {Instruction{j, mu, Perm{}}}};
}

TEST_CASE("conjugate_output rewrites the output cycle pointwise") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; trial++) {
        Perm mu = random_five_cycle(rng);
        Perm target = random_five_cycle(rng);
        Program p = bit_program(4, 1 + (int)(rng() % 4), mu);
        Program q = conjugate_output(p, mu, target);
        CHECK(q.instrs.size() == p.instrs.size());
        for (uint32_t z = 0; z < 16; z++) {
            Perm before = eval_program(p, z);
            Perm after = eval_program(q, z);
            CHECK(after == (before == mu ? target : Perm{}));
        }
    }
    CHECK_THROWS(conjugate_output(Program{2, {}}, five_cycle({1, 2, 3, 4, 5}),
                                  five_cycle({1, 2, 3, 4, 5})));
    CHECK_THROWS(conjugate_output(bit_program(2, 1, five_cycle({1, 2, 3, 4, 5})),
                                  five_cycle({1, 2, 3, 4, 5}), Perm{}));
}

TEST_CASE("negate_program flips the predicate at equal length") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; trial++) {
        Perm mu = random_five_cycle(rng);
        Perm target = random_five_cycle(rng);
        Program p = bit_program(4, 1 + (int)(rng() % 4), mu);
        Program q = negate_program(p, mu, target);
        CHECK(q.instrs.size() == p.instrs.size());
        for (uint32_t z = 0; z < 16; z++) {
            bool was_true = eval_program(p, z) == mu;
            CHECK(eval_program(q, z) == (was_true ? Perm{} : target));
        }
    }
}

TEST_CASE("netlist parsing") {
    std::string text =
        "w1 = AND x1 y1\n"
        "w2 = NOT w1\n"
        "w3 = OR w2 x2\n"
        "out = w3\n";
    Circuit c = parse_circuit(text);
    CHECK(c.n == 2);
    CHECK(c.depth() == 2);
    // truth: OR(NOT(AND(x1,y1)), x2)
    for (uint32_t x = 0; x < 4; x++)
        for (uint32_t y = 0; y < 4; y++) {
            bool want = !((x >> 1) & (y >> 1)) || (x & 1);
            CHECK(eval_circuit(c, x, y) == want);
        }
    // round trip
    Circuit c2 = parse_circuit(serialize_circuit(c));
    CHECK(c2.n == c.n);
    for (uint32_t x = 0; x < 4; x++)
        for (uint32_t y = 0; y < 4; y++) CHECK(eval_circuit(c2, x, y) == eval_circuit(c, x, y));

    auto expect_line = [](const std::string& t, int line) {
        try {
            parse_circuit(t);
            FAIL("expected parse error on: ", t);
        } catch (const CircuitParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("w1 = AND x1\nout = w1\n", 1);        // one operand
    expect_line("w1 = NAND x1 y1\nout = w1\n", 1);    // unknown gate
    expect_line("w1 = AND x1 w9\nout = w1\n", 1);     // undefined wire
    expect_line("w1 = AND x1 y1\nw1 = NOT x1\n", 2);  // redefinition
    expect_line("w1 = AND x1 y1\n", 1);               // missing out
    expect_line("out = w1\n", 1);                     // undefined out wire
}

TEST_CASE("circuit depth ignores NOT gates") {
    Circuit c = parse_circuit("w1 = NOT x1\nw2 = NOT w1\nout = w2\n");
    CHECK(c.depth() == 0);
    Program p = compile_circuit(c);
    CHECK(p.instrs.size() == 1);  // 4^0
}

TEST_CASE("compile_circuit: correctness and exact length bound") {
    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 120; trial++) {
        int n = 1 + (int)(rng() % 4);  // up to 8 inputs
        int budget = (int)(rng() % 5);
        Circuit c = gh::testing::random_circuit(rng, n, budget);
        int d = c.depth();
        REQUIRE(d <= budget);
        Program p = compile_circuit(c);
        uint64_t bound = 1;
        for (int i = 0; i < d; i++) bound *= 4;
        CHECK(p.instrs.size() <= bound);
        CHECK(p.input_len == 2 * n);
        for (uint32_t x = 0; x < (1u << n); x++)
            for (uint32_t y = 0; y < (1u << n); y++) {
                Perm v = eval_program(p, (x << n) | y);
                bool truth = gh::testing::eval_reference(c, x, y);
                CHECK(eval_circuit(c, x, y) == truth);
                CHECK(v == (truth ? compile_output() : Perm{}));
            }
    }
}

TEST_CASE("alternate: layered structure and pointwise agreement") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; trial++) {
        int n = 1 + (int)(rng() % 3);
        Circuit c = gh::testing::random_circuit(rng, n, 2 + (int)(rng() % 2));
        Program p = compile_circuit(c);
        AltProgram ap = alternate(p, n);
        CHECK(ap.steps.size() % 2 == 0);
        for (size_t i = 0; i < ap.steps.size(); i++)
            CHECK(ap.steps[i].owner == (i % 2 == 0 ? Side::alice : Side::bob));
        for (uint32_t x = 0; x < (1u << n); x++)
            for (uint32_t y = 0; y < (1u << n); y++)
                CHECK(eval_alt(ap, x, y) == eval_program(p, (x << n) | y));
    }

    // empty program pads to one idle Alice/Bob pair
    AltProgram pad = alternate(Program{2, {}}, 1);
    CHECK(pad.steps.size() == 2);
    CHECK(eval_alt(pad, 1, 1).is_identity());

    // bob-first programs get an idle Alice layer in front
    Program bobfirst{2, {{2, five_cycle({1, 2, 3, 4, 5}), Perm{}}}};
    AltProgram bp = alternate(bobfirst, 1);
    CHECK(bp.steps.size() == 2);
    CHECK(bp.steps[0].owner == Side::alice);
}

TEST_CASE("program_to_game: frozen sizes") {
    // one Alice instruction pads to l=2, giving size 5*2+4 = 14
    Program single{2, {{1, five_cycle({1, 2, 3, 4, 5}), Perm{}}}};
    AltProgram ap = alternate(single, 1);
    CHECK(ap.steps.size() == 2);
    GardenHoseGame g = program_to_game(ap);
    CHECK(g.s == 14);
    REQUIRE(validate_game(g).ok);
    // predicate is "x = 1"
    BooleanFunction fx{1, [](uint32_t x, uint32_t) { return x == 1; }};
    CHECK(computes(g, fx).ok);

    // AND on one bit per player: l=4, size 24
    Circuit c = parse_circuit("w1 = AND x1 y1\nout = w1\n");
    AltProgram ap2 = alternate(compile_circuit(c), 1);
    CHECK(ap2.steps.size() == 4);
    GardenHoseGame g2 = program_to_game(ap2);
    CHECK(g2.s == 24);
    REQUIRE(validate_game(g2).ok);
    CHECK(computes(g2, bf_and(1)).ok);
}

TEST_CASE("program_to_game rejects non-layered programs") {
    AltProgram bad;
    bad.n = 1;
    bad.steps.push_back({Side::bob, [](uint32_t) { return Perm{}; }});
    bad.steps.push_back({Side::alice, [](uint32_t) { return Perm{}; }});
    CHECK_THROWS(program_to_game(bad));
    bad.steps.pop_back();
    CHECK_THROWS(program_to_game(bad));
}

TEST_CASE("end-to-end: random circuits become games computing them") {
    std::mt19937_64 rng(31337);
    int done = 0;
    while (done < 25) {
        int n = 1 + (int)(rng() % 3);  // 3+3 bits max
        Circuit c = gh::testing::random_circuit(rng, n, 2);
        if (c.depth() > 2) continue;
        done++;
        Program p = compile_circuit(c);
        GardenHoseGame g = program_to_game(alternate(p, n));
        REQUIRE(validate_game(g).ok);
        BooleanFunction f{n, [&c](uint32_t x, uint32_t y) { return gh::testing::eval_reference(c, x, y); }};
        auto r = computes_serial(g, f);
        CHECK_MESSAGE(r.ok, "cx=", r.cx, " cy=", r.cy);
    }
}
