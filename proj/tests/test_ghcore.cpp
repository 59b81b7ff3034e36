#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>

#include "gh/bits.hpp"
#include "gh/dot.hpp"
#include "gh/game.hpp"
#include "gh/gamefile.hpp"
#include "gh/verify.hpp"
#include "helpers.hpp"

using namespace gh;

// The 3-pipe XOR game used as the fixed flow oracle throughout this file:
// alice(x) = {tap - pipe(1+x)}, bob(y) = {pipe(1+y) - pipe 3}.
static GardenHoseGame xor3() {
    GardenHoseGame g;
    g.n = 1;
    g.s = 3;
    g.alice = [](uint32_t x) {
        Matching m;
        m.add(0, 1 + (int)x);
        return m;
    };
    g.bob = [](uint32_t y) {
        Matching m;
        m.add(1 + (int)y, 3);
        return m;
    };
    return g;
}

TEST_CASE("bitstring packing is MSB-first") {
    CHECK(parse_bits("011", 3) == 3);
    CHECK(parse_bits("100", 3) == 4);
    CHECK(format_bits(4, 3) == "100");
    CHECK(bit_at(parse_bits("100", 3), 3, 1) == 1);
    CHECK(bit_at(parse_bits("100", 3), 3, 3) == 0);
    CHECK_THROWS(parse_bits("10", 3));
    CHECK_THROWS(parse_bits("1x0", 3));
}

TEST_CASE("matching primitives") {
    Matching m;
    m.add(3, 1);
    m.add(0, 2);
    CHECK(m.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    CHECK(m.partner(3) == 1);
    CHECK(m.partner(2) == 0);
    CHECK(m.partner(4) == -1);
    CHECK(check_matching(m, 0, 3).empty());
    CHECK(!check_matching(m, 1, 3).empty());  // vertex 0 out of range

    Matching deg;
    deg.add(1, 2);
    deg.add(2, 3);
    CHECK(!check_matching(deg, 0, 3).empty());  // degree 2 at vertex 2

    Matching loop;
    loop.add(2, 2);
    CHECK(!check_matching(loop, 0, 3).empty());
}

TEST_CASE("water path: hand-traced XOR instances") {
    auto g = xor3();

    // (0,0): tap -> 1A -> 1B -> 3B -> 3A, water exits on Alice's side
    WaterPath p = flow(g, 0, 0);
    std::vector<PathVertex> want = {
        {0, Side::alice}, {1, Side::alice}, {1, Side::bob}, {3, Side::bob}, {3, Side::alice}};
    CHECK(p.verts == want);
    CHECK(p.terminal() == Side::alice);

    // (0,1): tap -> 1A -> 1B, exits on Bob's side
    p = flow(g, 0, 1);
    want = {{0, Side::alice}, {1, Side::alice}, {1, Side::bob}};
    CHECK(p.verts == want);
    CHECK(p.terminal() == Side::bob);

    // (1,1): symmetric to (0,0) through pipe 2
    p = flow(g, 1, 1);
    CHECK(p.terminal() == Side::alice);

    // (1,0): exits at Bob
    CHECK(flow(g, 1, 0).terminal() == Side::bob);
}

TEST_CASE("tap unconnected means the water never leaves Alice") {
    GardenHoseGame g;
    g.n = 1;
    g.s = 2;
    g.alice = [](uint32_t) { return Matching{}; };
    g.bob = [](uint32_t) {
        Matching m;
        m.add(1, 2);
        return m;
    };
    WaterPath p = flow(g, 0, 0);
    CHECK(p.verts == std::vector<PathVertex>{{0, Side::alice}});
    CHECK(p.terminal() == Side::alice);
}

TEST_CASE("validate_game reports offending inputs") {
    auto g = xor3();
    CHECK(validate_game(g).ok);

    GardenHoseGame bad = g;
    bad.alice = [](uint32_t x) {
        Matching m;
        m.add(0, 1);
        if (x == 1) m.add(1, 2);  // degree 2 at pipe 1
        return m;
    };
    auto r = validate_game(bad);
    CHECK(!r.ok);
    REQUIRE(r.problems.size() == 1);
    CHECK(r.problems[0].find("alice x=1") != std::string::npos);

    GardenHoseGame oob = g;
    oob.bob = [](uint32_t) {
        Matching m;
        m.add(0, 3);  // tap is not a Bob vertex
        return m;
    };
    CHECK(!validate_game(oob).ok);
}

using gh::testing::random_game;

TEST_CASE("flow properties on random valid games") {
    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 200; trial++) {
        int n = 1 + rng() % 3;
        int s = rng() % 9;
        auto g = random_game(rng, n, s);
        REQUIRE(validate_game(g).ok);
        for (uint32_t x = 0; x < (1u << n); x++) {
            for (uint32_t y = 0; y < (1u << n); y++) {
                WaterPath p = flow(g, x, y);
                // bounded length, starts at the tap
                CHECK(p.verts.size() <= 2 * (size_t)s + 2);
                CHECK(p.verts.front() == PathVertex{0, Side::alice});
                // no vertex visited twice on the same side
                for (size_t i = 0; i < p.verts.size(); i++)
                    for (size_t j = i + 1; j < p.verts.size(); j++) CHECK(!(p.verts[i] == p.verts[j]));
                // deterministic
                CHECK(flow(g, x, y).verts == p.verts);
                // agrees with the partner-array kernel
                CHECK(flow_terminal(partner_array(g.alice(x), s), partner_array(g.bob(y), s)) ==
                      p.terminal());
            }
        }
    }
}

TEST_CASE("flow only depends on edges along the path") {
    // removing a hose edge the water never touches cannot change the path
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; trial++) {
        int n = 1 + rng() % 2;
        int s = 2 + rng() % 7;
        auto g = random_game(rng, n, s);
        uint32_t x = rng() % (1u << n), y = rng() % (1u << n);
        WaterPath p = flow(g, x, y);

        Matching ma = g.alice(x);
        if (ma.edges.empty()) continue;
        size_t drop = rng() % ma.edges.size();
        auto [du, dv] = ma.edges[drop];
        bool on_path = false;
        for (auto& pv : p.verts)
            if (pv.side == Side::alice && (pv.v == du || pv.v == dv)) on_path = true;
        if (on_path) continue;

        Matching trimmed;
        for (size_t i = 0; i < ma.edges.size(); i++)
            if (i != drop) trimmed.add(ma.edges[i].first, ma.edges[i].second);
        GardenHoseGame g2 = g;
        g2.alice = [trimmed, &g, x](uint32_t xx) { return xx == x ? trimmed : g.alice(xx); };
        CHECK(flow(g2, x, y).verts == p.verts);
    }
}

TEST_CASE("computes: parallel kernel matches the serial reference") {
    auto g = xor3();
    BooleanFunction f = bf_xor(1);
    auto pr = computes(g, f);
    auto sr = computes_serial(g, f);
    CHECK(pr.ok);
    CHECK(sr.ok);
    CHECK(pr.cases == 4);

    // perturb one bob matching: both kernels must report the same smallest
    // counterexample
    GardenHoseGame bad = g;
    bad.bob = [&g](uint32_t y) { return y == 1 ? Matching{} : g.bob(y); };
    auto pb = computes(bad, f);
    auto sb = computes_serial(bad, f);
    CHECK(!pb.ok);
    CHECK(!sb.ok);
    CHECK(pb.cx == sb.cx);
    CHECK(pb.cy == sb.cy);
    // bob y=1 empty means (0,1) still exits at Bob (correct, xor=1), but
    // (1,1) now exits at Bob too while xor=0: smallest counterexample (1,1)
    CHECK(sb.cx == 1);
    CHECK(sb.cy == 1);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; trial++) {
        auto rg = random_game(rng, 2, 5);
        auto want = computes_serial(rg, bf_eq(2));
        auto got = computes(rg, bf_eq(2));
        CHECK(want.ok == got.ok);
        if (!want.ok) {
            CHECK(want.cx == got.cx);
            CHECK(want.cy == got.cy);
        }
    }
}

TEST_CASE("game file round trip") {
    auto g = xor3();
    std::string text = serialize_game(g);
    auto g2 = parse_game(text);
    CHECK(g2.n == 1);
    CHECK(g2.s == 3);
    for (uint32_t x = 0; x < 2; x++) CHECK(g2.alice(x) == g.alice(x));
    for (uint32_t y = 0; y < 2; y++) CHECK(g2.bob(y) == g.bob(y));
    CHECK(serialize_game(g2) == text);

    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 20; trial++) {
        auto rg = random_game(rng, 2, 6);
        auto back = parse_game(serialize_game(rg));
        for (uint32_t v = 0; v < 4; v++) {
            CHECK(back.alice(v) == rg.alice(v));
            CHECK(back.bob(v) == rg.bob(v));
        }
    }
}

TEST_CASE("game file parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_game(text);
            FAIL("expected parse error");
        } catch (const GameParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("alice x=0: 0-1\n", 1);                           // header missing
    expect_line("ghgame n=1 s=2\nalice x=0: 0-5\n", 2);           // vertex out of range
    expect_line("ghgame n=1 s=2\nalice x=0: 0-1, 1-2\n", 2);      // degree 2
    expect_line("ghgame n=1 s=2\nbob y=0: 0-1\n", 2);             // tap on bob side
    expect_line("ghgame n=1 s=2\nalice x=0:\nalice x=0:\n", 3);   // duplicate block
    expect_line("ghgame n=1 s=2\nalice x=0:\nalice x=1:\nbob y=0:\n", 4);  // missing bob y=1

    // a matching rejected by the parser must also fail check_matching
    try {
        parse_game("ghgame n=1 s=2\nalice x=0: 1-1\n");
        FAIL("expected parse error");
    } catch (const GameParseError&) {
    }
}

TEST_CASE("dot rendering") {
    auto g = xor3();
    std::string dot = render_diagram(g, 0, 0);
    CHECK(dot.find("graph gardenhose {") == 0);
    CHECK(dot.find("exit=alice") != std::string::npos);
    // three pipes, all drawn
    CHECK(dot.find("a1 -- b1") != std::string::npos);
    CHECK(dot.find("a2 -- b2") != std::string::npos);
    CHECK(dot.find("a3 -- b3") != std::string::npos);
    // the water path tap -> 1A -> 1B -> 3B -> 3A: four blue edges
    size_t blue = 0, at = 0;
    while ((at = dot.find("color=blue", at)) != std::string::npos) blue++, at++;
    CHECK(blue == 4);
    // deterministic
    CHECK(render_diagram(g, 0, 0) == dot);

    // 0-pipe game renders with just the tap
    GardenHoseGame empty;
    empty.n = 0;
    empty.s = 0;
    empty.alice = [](uint32_t) { return Matching{}; };
    empty.bob = [](uint32_t) { return Matching{}; };
    std::string edot = render_diagram(empty, 0, 0);
    CHECK(edot.find("tap") != std::string::npos);
    CHECK(edot.find(" -- ") == std::string::npos);
}

TEST_CASE("materialize preserves behavior") {
    auto g = xor3();
    auto m = materialize(g);
    for (uint32_t x = 0; x < 2; x++)
        for (uint32_t y = 0; y < 2; y++) CHECK(flow(m, x, y).verts == flow(g, x, y).verts);
}
