#include "gh/strategies.hpp"

#include <memory>
#include <stdexcept>

#include "gh/bits.hpp"

namespace gh {

GardenHoseGame build_xor() {
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

GardenHoseGame build_eq(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("eq: n out of range");
    // pipe labels: R_i = i+1 (i in 0..n), Q^b_i = n+2(i-1)+b+2
    auto R = [](int i) { return i + 1; };
    auto Q = [n](int b, int i) { return n + 2 * (i - 1) + b + 2; };
    GardenHoseGame g;
    g.n = n;
    g.s = 3 * n + 1;
    g.alice = [n, R, Q](uint32_t x) {
        Matching m;
        m.add(0, R(0));
        for (int i = 1; i <= n; i++) m.add(R(i), Q(bit_at(x, n, i), i));
        return m;
    };
    g.bob = [n, R, Q](uint32_t y) {
        Matching m;
        for (int i = 1; i <= n; i++) m.add(R(i - 1), Q(bit_at(y, n, i), i));
        return m;
    };
    return g;
}

GardenHoseGame build_ip(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("ip: n out of range");
    auto Q = [](int b, int i) { return 4 * (i - 1) + 1 + b; };
    auto R = [](int b, int i) { return 4 * (i - 1) + 3 + b; };
    const int end_pipe = 4 * n + 1;
    GardenHoseGame g;
    g.n = n;
    g.s = end_pipe;
    g.alice = [n, Q, R, end_pipe](uint32_t x) {
        Matching m;
        std::vector<int> ones;
        for (int i = 1; i <= n; i++)
            if (bit_at(x, n, i)) ones.push_back(i);
        if (ones.empty()) return m;  // f(0^n, y) = 0: keep the tap dry
        m.add(0, Q(0, ones.front()));
        for (size_t j = 0; j + 1 < ones.size(); j++) {
            m.add(R(0, ones[j]), Q(0, ones[j + 1]));
            m.add(R(1, ones[j]), Q(1, ones[j + 1]));
        }
        // last contributing index: register 0 exits here, register 1 wins
        m.add(R(1, ones.back()), end_pipe);
        return m;
    };
    g.bob = [n, Q, R](uint32_t y) {
        Matching m;
        for (int i = 1; i <= n; i++) {
            int b = bit_at(y, n, i);
            m.add(Q(0, i), R(b, i));
            m.add(Q(1, i), R(1 - b, i));
        }
        return m;
    };
    return g;
}

namespace {

// Pipe layout shared by both majority variants. In the plain form every
// counter value 0..n/2 exists at every index; the optimized form keeps a
// value only if it is reachable (at most i-1 increments before index i) and
// still allows reaching n/2+1 with the steps that remain.
struct MajLayout {
    int n, half;
    std::vector<std::vector<int>> q, r;  // [i][c] -> pipe id, 0 = absent
    int size = 0;

    MajLayout(int n_, bool optimized) : n(n_), half(n_ / 2) {
        q.assign(n + 1, std::vector<int>(half + 1, 0));
        r.assign(n + 1, std::vector<int>(half + 1, 0));
        for (int i = 1; i <= n; i++) {
            int lo = optimized ? std::max(0, i - half) : 0;
            int qhi = optimized ? std::min(i - 1, half) : half;
            int rhi = optimized ? std::min(i, half) : half;
            for (int c = lo; c <= qhi; c++) q[i][c] = ++size;
            for (int c = lo; c <= rhi; c++) r[i][c] = ++size;
        }
    }
};

}  // namespace

GardenHoseGame build_maj(int n, bool optimized) {
    if (n < 2 || n % 2 != 0 || n > 16) throw std::invalid_argument("maj: n must be even and in 2..16");
    auto lay = std::make_shared<MajLayout>(n, optimized);
    GardenHoseGame g;
    g.n = n;
    g.s = lay->size;
    g.alice = [n, lay](uint32_t x) {
        Matching m;
        std::vector<int> ones;
        for (int i = 1; i <= n; i++)
            if (bit_at(x, n, i)) ones.push_back(i);
        if (ones.empty()) return m;
        if (lay->q[ones.front()][0]) m.add(0, lay->q[ones.front()][0]);
        for (size_t j = 0; j + 1 < ones.size(); j++) {
            int i = ones[j], k = ones[j + 1];
            for (int c = 0; c <= lay->half; c++)
                if (lay->r[i][c] && lay->q[k][c]) m.add(lay->r[i][c], lay->q[k][c]);
        }
        // nothing at the last contributing index: a counter that never
        // overflowed exits on Alice's side
        return m;
    };
    g.bob = [n, lay](uint32_t y) {
        Matching m;
        for (int i = 1; i <= n; i++) {
            bool inc = bit_at(y, n, i);
            for (int c = 0; c <= lay->half; c++) {
                if (!lay->q[i][c]) continue;
                if (!inc)
                    m.add(lay->q[i][c], lay->r[i][c]);
                else if (c < lay->half)
                    m.add(lay->q[i][c], lay->r[i][c + 1]);
                // c == half with an increment: threshold reached, the open
                // pipe end lets the water exit on Bob's side
            }
        }
        return m;
    };
    return g;
}

GardenHoseGame build_generic(const BooleanFunction& f) {
    if (f.n < 1 || f.n > 12) throw std::invalid_argument("generic: n out of range (max 12)");
    const int n = f.n;
    const uint32_t count = 1u << n;
    const int reserve = (int)count + 1;
    // bob's pairings are worth caching; f may be arbitrarily slow
    auto bt = std::make_shared<std::vector<Matching>>(count);
    for (uint32_t y = 0; y < count; y++) {
        std::vector<int> zeros;
        for (uint32_t a = 0; a < count; a++)
            if (!f(a, y)) zeros.push_back((int)a + 1);
        Matching m;
        size_t j = 0;
        for (; j + 1 < zeros.size(); j += 2) m.add(zeros[j], zeros[j + 1]);
        if (j < zeros.size()) m.add(zeros[j], reserve);
        (*bt)[y] = std::move(m);
    }
    GardenHoseGame g;
    g.n = n;
    g.s = reserve;
    g.alice = [](uint32_t x) {
        Matching m;
        m.add(0, (int)x + 1);
        return m;
    };
    g.bob = [bt](uint32_t y) { return (*bt)[y]; };
    return g;
}

GardenHoseGame preprocess(const GardenHoseGame& g, int n_new,
                          std::function<uint32_t(uint32_t)> alpha,
                          std::function<uint32_t(uint32_t)> beta) {
    GardenHoseGame r;
    r.n = n_new;
    r.s = g.s;
    r.alice = [inner = g.alice, alpha](uint32_t x) { return inner(alpha(x)); };
    r.bob = [inner = g.bob, beta](uint32_t y) { return inner(beta(y)); };
    return r;
}

BooleanFunction otp_encode(int n, std::function<bool(uint32_t)> g) {
    return {n, [g](uint32_t x, uint32_t y) { return g(x ^ y); }};
}

}  // namespace gh
