// Compares the OpenMP kernels against their serial reference twins:
//   verify  - computes() vs computes_serial() on the equality construction
//   search  - exhaustive_gh() vs exhaustive_gh_serial() on a full miss scan
// Usage: gh_bench [verify_n] [search_cap] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "gh/boolfun.hpp"
#include "gh/search.hpp"
#include "gh/strategies.hpp"
#include "gh/verify.hpp"

using h_clock = std::chrono::steady_clock;

namespace {

double best_of(int repeats, const std::function<void()>& body) {
    double best = 1e30;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = h_clock::now();
        body();
        double dt = std::chrono::duration<double>(h_clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-22s serial %8.4fs   parallel %8.4fs   speedup %.2fx\n", name, serial,
                parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    const int verify_n = argc > 1 ? std::atoi(argv[1]) : 12;
    const int search_cap = argc > 2 ? std::atoi(argv[2]) : 4;
    const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
    if (verify_n < 1 || verify_n > 14 || search_cap < 0 || search_cap > 16 || repeats < 1) {
        std::fprintf(stderr, "usage: gh_bench [verify_n 1..14] [search_cap 0..16] [repeats]\n");
        return 2;
    }
    std::printf("threads: %d   (best of %d runs)\n", omp_get_max_threads(), repeats);

    // 2^(2n) water flows, one per input pair
    const gh::GardenHoseGame game = gh::build_eq(verify_n);
    const gh::BooleanFunction eq = gh::bf_eq(verify_n);
    bool ok_serial = false, ok_parallel = false;
    const double vs = best_of(repeats, [&] { ok_serial = gh::computes_serial(game, eq).ok; });
    const double vp = best_of(repeats, [&] { ok_parallel = gh::computes(game, eq).ok; });
    if (!ok_serial || ok_serial != ok_parallel) {
        std::fprintf(stderr, "verify kernels disagree\n");
        return 1;
    }
    char label[32];
    std::snprintf(label, sizeof label, "verify eq(%d)", verify_n);
    report(label, vs, vp);

    // full scan of every size up to the cap: two-bit equality needs more
    // pipes than that, so neither kernel exits early
    const gh::BooleanFunction target = gh::bf_eq(2);
    gh::SearchResult rs, rp;
    const double ss =
        best_of(repeats, [&] { rs = gh::exhaustive_gh_serial(target, search_cap, 1e9); });
    const double sp = best_of(repeats, [&] { rp = gh::exhaustive_gh(target, search_cap, 1e9); });
    if (rs.found != rp.found || rs.size != rp.size) {
        std::fprintf(stderr, "search kernels disagree\n");
        return 1;
    }
    std::snprintf(label, sizeof label, "search eq(2) cap %d", search_cap);
    report(label, ss, sp);
    if (rs.found) std::printf("search found a witness of size %d\n", rs.size);
    return 0;
}
