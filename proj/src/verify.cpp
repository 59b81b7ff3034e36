#include "gh/verify.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gh {

namespace {

constexpr uint64_t kNoFail = std::numeric_limits<uint64_t>::max();

std::vector<std::vector<int>> bob_arrays(const GardenHoseGame& g) {
    const uint32_t count = 1u << g.n;
    std::vector<std::vector<int>> bp;
    bp.reserve(count);
    for (uint32_t y = 0; y < count; y++) bp.push_back(partner_array(g.bob(y), g.s));
    return bp;
}

}  // namespace

VerifyResult computes_serial(const GardenHoseGame& g, const BooleanFunction& f) {
    if (f.n != g.n) throw std::invalid_argument("function arity does not match the game");
    const uint32_t count = 1u << g.n;
    VerifyResult r;
    r.cases = (uint64_t)count * count;
    const auto bp = bob_arrays(g);
    for (uint32_t x = 0; x < count; x++) {
        const auto ap = partner_array(g.alice(x), g.s);
        for (uint32_t y = 0; y < count; y++) {
            const bool water_at_bob = flow_terminal(ap, bp[y]) == Side::bob;
            if (water_at_bob != f(x, y)) {
                r.ok = false;
                r.cx = x;
                r.cy = y;
                return r;
            }
        }
    }
    return r;
}

VerifyResult computes(const GardenHoseGame& g, const BooleanFunction& f) {
    if (f.n != g.n) throw std::invalid_argument("function arity does not match the game");
    const uint32_t count = 1u << g.n;
    VerifyResult r;
    r.cases = (uint64_t)count * count;
    const auto bp = bob_arrays(g);

    // Packed (x,y) so the atomic min recovers the lexicographically smallest
    // counterexample no matter how the iterations are scheduled.
    std::atomic<uint64_t> best{kNoFail};

#pragma omp parallel for schedule(dynamic, 64)
    for (uint32_t x = 0; x < count; x++) {
        if ((best.load(std::memory_order_relaxed) >> 32) < x) continue;
        const auto ap = partner_array(g.alice(x), g.s);
        for (uint32_t y = 0; y < count; y++) {
            const bool water_at_bob = flow_terminal(ap, bp[y]) == Side::bob;
            if (water_at_bob != f(x, y)) {
                uint64_t packed = ((uint64_t)x << 32) | y;
                uint64_t cur = best.load(std::memory_order_relaxed);
                while (packed < cur && !best.compare_exchange_weak(cur, packed)) {
                }
                break;  // smaller y for this x is impossible
            }
        }
    }

    const uint64_t found = best.load();
    if (found != kNoFail) {
        r.ok = false;
        r.cx = (uint32_t)(found >> 32);
        r.cy = (uint32_t)found;
    }
    return r;
}

}  // namespace gh
