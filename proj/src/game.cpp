#include "gh/game.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "gh/bits.hpp"

namespace gh {

void Matching::add(int u, int v) {
    if (u > v) std::swap(u, v);
    auto e = std::make_pair(u, v);
    edges.insert(std::upper_bound(edges.begin(), edges.end(), e), e);
}

int Matching::partner(int v) const {
    for (auto& [a, b] : edges) {
        if (a == v) return b;
        if (b == v) return a;
    }
    return -1;
}

std::string check_matching(const Matching& m, int lo, int hi) {
    std::vector<int> seen;
    for (auto& [u, v] : m.edges) {
        if (u == v) return "self-loop at vertex " + std::to_string(u);
        for (int w : {u, v}) {
            if (w < lo || w > hi)
                return "vertex " + std::to_string(w) + " outside [" + std::to_string(lo) + "," +
                       std::to_string(hi) + "]";
            if (std::find(seen.begin(), seen.end(), w) != seen.end())
                return "vertex " + std::to_string(w) + " has degree > 1";
            seen.push_back(w);
        }
    }
    return "";
}

ValidationReport validate_game(const GardenHoseGame& g) {
    ValidationReport r;
    if (g.n < 0 || g.n > 31) {
        r.problems.push_back("n out of range");
        r.ok = false;
        return r;
    }
    const uint32_t count = 1u << g.n;
    for (uint32_t x = 0; x < count; x++) {
        std::string p = check_matching(g.alice(x), 0, g.s);
        if (!p.empty()) r.problems.push_back("alice x=" + format_bits(x, g.n) + ": " + p);
    }
    for (uint32_t y = 0; y < count; y++) {
        std::string p = check_matching(g.bob(y), 1, g.s);
        if (!p.empty()) r.problems.push_back("bob y=" + format_bits(y, g.n) + ": " + p);
    }
    r.ok = r.problems.empty();
    return r;
}

WaterPath flow(const GardenHoseGame& g, uint32_t x, uint32_t y) {
    const Matching ma = g.alice(x);
    const Matching mb = g.bob(y);
    WaterPath p;
    p.verts.push_back({0, Side::alice});
    int v = ma.partner(0);
    if (v < 0) return p;  // tap unconnected: water never leaves Alice
    p.verts.push_back({v, Side::alice});
    Side side = Side::alice;
    const size_t cap = 2 * (size_t)g.s + 2;
    for (;;) {
        // pipe traversal to the other side
        side = side == Side::alice ? Side::bob : Side::alice;
        p.verts.push_back({v, side});
        // hose hop on that side, if the pipe end is connected
        int w = side == Side::alice ? ma.partner(v) : mb.partner(v);
        if (w < 0) return p;
        if (side == Side::alice && w == 0)
            throw std::logic_error("water flowed back into the tap; strategies are not matchings");
        v = w;
        p.verts.push_back({v, side});
        if (p.verts.size() > cap)
            throw std::logic_error("water path exceeds 2s+2 vertices; strategies are not matchings");
    }
}

std::vector<int> partner_array(const Matching& m, int s) {
    std::vector<int> a(s + 1, -1);
    for (auto& [u, v] : m.edges) {
        a[u] = v;
        a[v] = u;
    }
    return a;
}

Side flow_terminal(const std::vector<int>& apartner, const std::vector<int>& bpartner) {
    int v = apartner[0];
    if (v < 0) return Side::alice;
    Side side = Side::alice;
    for (;;) {
        side = side == Side::alice ? Side::bob : Side::alice;
        int w = side == Side::alice ? apartner[v] : bpartner[v];
        if (w <= 0) return side;  // w == 0 (the tap) is unreachable in a valid game
        v = w;
    }
}

GardenHoseGame materialize(const GardenHoseGame& g) {
    if (g.n > 16) throw std::invalid_argument("refusing to materialize tables beyond n=16");
    const uint32_t count = 1u << g.n;
    auto at = std::make_shared<std::vector<Matching>>();
    auto bt = std::make_shared<std::vector<Matching>>();
    at->reserve(count);
    bt->reserve(count);
    for (uint32_t x = 0; x < count; x++) at->push_back(g.alice(x));
    for (uint32_t y = 0; y < count; y++) bt->push_back(g.bob(y));
    GardenHoseGame m;
    m.n = g.n;
    m.s = g.s;
    m.alice = [at](uint32_t x) { return (*at)[x]; };
    m.bob = [bt](uint32_t y) { return (*bt)[y]; };
    return m;
}

}  // namespace gh
