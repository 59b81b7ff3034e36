#include "gh/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

namespace gh {

std::vector<Matching> all_matchings(int lo, int hi) {
    std::vector<Matching> out;
    std::vector<int> free;
    for (int v = lo; v <= hi; v++) free.push_back(v);
    Matching cur;
    // Branch on the smallest free vertex: leave it unmatched, or pair it
    // with each larger free vertex in turn.
    auto rec = [&](auto&& self, size_t from) -> void {
        while (from < free.size() && free[from] < 0) from++;
        if (from >= free.size()) {
            out.push_back(cur);
            return;
        }
        int v = free[from];
        free[from] = -1;
        self(self, from + 1);
        for (size_t j = from + 1; j < free.size(); j++) {
            if (free[j] < 0) continue;
            int w = free[j];
            free[j] = -1;
            cur.add(v, w);
            self(self, from + 1);
            cur.edges.erase(std::find(cur.edges.begin(), cur.edges.end(),
                                      std::make_pair(std::min(v, w), std::max(v, w))));
            free[j] = w;
        }
        free[from] = v;
    };
    rec(rec, 0);
    return out;
}

namespace {

constexpr uint64_t kNotFound = std::numeric_limits<uint64_t>::max();

// Canonical form under pipe relabeling: scanning Alice's matchings in input
// order (edges sorted within each one), the k-th distinct pipe encountered
// must be pipe k. Every assignment is isomorphic to exactly one such form.
bool first_use_canonical(const std::vector<const Matching*>& assign, int s) {
    int next_new = 1;
    std::vector<char> seen(s + 1, 0);
    for (const Matching* m : assign)
        for (auto [u, v] : m->edges)
            for (int p : {u, v}) {
                if (p == 0 || seen[p]) continue;
                if (p != next_new) return false;
                seen[p] = 1;
                next_new++;
            }
    return true;
}

struct SearchContext {
    int n = 0, s = 0;
    uint32_t inputs = 0;  // 2^n
    std::vector<Matching> alice_ms, bob_ms;
    std::vector<std::vector<int>> alice_ps, bob_ps;  // partner arrays
    std::vector<char> ftab;                          // f(x,y) at x*inputs+y

    explicit SearchContext(const BooleanFunction& f, int s_) {
        n = f.n;
        s = s_;
        inputs = 1u << n;
        alice_ms = all_matchings(0, s);
        bob_ms = all_matchings(1, s);
        for (const Matching& m : alice_ms) alice_ps.push_back(partner_array(m, s));
        for (const Matching& m : bob_ms) bob_ps.push_back(partner_array(m, s));
        ftab.resize(inputs * inputs);
        for (uint32_t x = 0; x < inputs; x++)
            for (uint32_t y = 0; y < inputs; y++) ftab[x * inputs + y] = f(x, y);
    }

    double raw_assignments() const {
        return std::pow(static_cast<double>(alice_ms.size()), inputs);
    }
    uint64_t assignments() const { return static_cast<uint64_t>(raw_assignments()); }

    void unrank(uint64_t rank, std::vector<int>& idx) const {
        for (uint32_t x = inputs; x-- > 0;) {
            idx[x] = rank % alice_ms.size();
            rank /= alice_ms.size();
        }
    }

    // Independent per column: some Bob matching must route every x to the
    // right side. Returns the first working matching index, or -1.
    int bob_for_column(const std::vector<int>& idx, uint32_t y) const {
        for (size_t b = 0; b < bob_ms.size(); b++) {
            bool ok = true;
            for (uint32_t x = 0; x < inputs && ok; x++) {
                bool at_bob = flow_terminal(alice_ps[idx[x]], bob_ps[b]) == Side::bob;
                ok = at_bob == static_cast<bool>(ftab[x * inputs + y]);
            }
            if (ok) return static_cast<int>(b);
        }
        return -1;
    }

    bool works(const std::vector<int>& idx, std::vector<int>* bob_idx) const {
        std::vector<const Matching*> assign(inputs);
        for (uint32_t x = 0; x < inputs; x++) assign[x] = &alice_ms[idx[x]];
        if (!first_use_canonical(assign, s)) return false;
        for (uint32_t y = 0; y < inputs; y++) {
            int b = bob_for_column(idx, y);
            if (b < 0) return false;
            if (bob_idx) (*bob_idx)[y] = b;
        }
        return true;
    }

    GardenHoseGame witness(uint64_t rank) const {
        std::vector<int> idx(inputs), bob_idx(inputs);
        unrank(rank, idx);
        works(idx, &bob_idx);
        auto at = std::make_shared<std::vector<Matching>>();
        auto bt = std::make_shared<std::vector<Matching>>();
        for (uint32_t x = 0; x < inputs; x++) at->push_back(alice_ms[idx[x]]);
        for (uint32_t y = 0; y < inputs; y++) bt->push_back(bob_ms[bob_idx[y]]);
        GardenHoseGame g;
        g.n = n;
        g.s = s;
        g.alice = [at](uint32_t x) { return at->at(x); };
        g.bob = [bt](uint32_t y) { return bt->at(y); };
        return g;
    }
};

void check_search_args(const BooleanFunction& f, int cap) {
    if (f.n < 1 || f.n > 2)
        throw std::invalid_argument("exhaustive search supports n in {1, 2}");
    if (cap < 0 || cap > 16) throw std::invalid_argument("search cap out of range");
}

void check_space(const SearchContext& ctx, double space_limit) {
    double raw = ctx.raw_assignments();
    if (raw > std::min(space_limit, 9e18))
        throw std::invalid_argument(
            "search space " + std::to_string(raw) + " exceeds the limit at s=" +
            std::to_string(ctx.s) + "; raise space_limit or lower the cap");
}

}  // namespace

SearchResult exhaustive_gh_serial(const BooleanFunction& f, int cap, double space_limit) {
    check_search_args(f, cap);
    for (int s = 0; s <= cap; s++) {
        SearchContext ctx(f, s);
        check_space(ctx, space_limit);
        const uint64_t total = ctx.assignments();
        std::vector<int> idx(ctx.inputs);
        for (uint64_t rank = 0; rank < total; rank++) {
            ctx.unrank(rank, idx);
            if (ctx.works(idx, nullptr)) return {true, s, ctx.witness(rank)};
        }
    }
    return {false, cap + 1, {}};
}

SearchResult exhaustive_gh(const BooleanFunction& f, int cap, double space_limit) {
    check_search_args(f, cap);
    for (int s = 0; s <= cap; s++) {
        SearchContext ctx(f, s);
        check_space(ctx, space_limit);
        const uint64_t total = ctx.assignments();

        // Identical enumeration order as the serial version; the atomic min
        // makes the winning rank independent of thread scheduling.
        std::atomic<uint64_t> best{kNotFound};
#pragma omp parallel
        {
            std::vector<int> idx(ctx.inputs);
#pragma omp for schedule(dynamic, 256)
            for (uint64_t rank = 0; rank < total; rank++) {
                if (rank >= best.load(std::memory_order_relaxed)) continue;
                ctx.unrank(rank, idx);
                if (!ctx.works(idx, nullptr)) continue;
                uint64_t seen = best.load(std::memory_order_relaxed);
                while (rank < seen &&
                       !best.compare_exchange_weak(seen, rank, std::memory_order_relaxed))
                    ;
            }
        }
        if (best.load() != kNotFound) return {true, s, ctx.witness(best.load())};
    }
    return {false, cap + 1, {}};
}

}  // namespace gh
