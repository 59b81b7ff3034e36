#include "gh/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace gh {

namespace {

using boost::multiprecision::cpp_int;
using float100 = boost::multiprecision::cpp_bin_float_100;

// One packed row (or column) of the truth table per outer input.
std::vector<std::vector<uint64_t>> table_rows(const BooleanFunction& f, bool columns) {
    if (f.n > 12) throw std::invalid_argument("injectivity check supports n <= 12");
    uint32_t size = 1u << f.n;
    std::vector<std::vector<uint64_t>> rows(size,
                                            std::vector<uint64_t>((size + 63) / 64, 0));
    for (uint32_t a = 0; a < size; a++)
        for (uint32_t b = 0; b < size; b++) {
            bool bit = columns ? f(b, a) : f(a, b);
            if (bit) rows[a][b / 64] |= 1ull << (b % 64);
        }
    return rows;
}

bool all_distinct(std::vector<std::vector<uint64_t>> rows) {
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

// Smallest s in [lo, inf) satisfying the monotone predicate.
int64_t first_holding(int64_t lo, int n, bool (*holds)(int64_t, int)) {
    int64_t hi = std::max<int64_t>(lo, 1);
    while (!holds(hi, n)) hi *= 2;
    int64_t low = lo;
    while (low < hi) {
        int64_t mid = low + (hi - low) / 2;
        if (holds(mid, n))
            hi = mid;
        else
            low = mid + 1;
    }
    return hi;
}

}  // namespace

bool injective_for_alice(const BooleanFunction& f) {
    return all_distinct(table_rows(f, false));
}

bool injective_for_bob(const BooleanFunction& f) {
    return all_distinct(table_rows(f, true));
}

bool injective_bound_holds(int64_t s, int n) {
    // s·log2(s) >= n  <=>  s^s >= 2^n  (s = 1 gives 0, so it never holds for n >= 1)
    if (s < 1) return n <= 0;
    cpp_int lhs = pow(cpp_int(s), static_cast<unsigned>(s));
    return lhs >= cpp_int(1) << n;
}

bool counting_bound_holds(int64_t s, int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("counting bound supports 1 <= n <= 30");
    if (s < 0) return false;
    uint64_t u = static_cast<uint64_t>(s) + 1;
    uint64_t rhs = 1ull << (n - 1);
    if ((u & (u - 1)) == 0)  // power of two: u·log2(u) is an integer
        return cpp_int(u) * (std::bit_width(u) - 1) >= rhs;

    // u·log2(u) is irrational here, so it cannot sit on the integer
    // threshold; make sure the 100-digit evaluation is nowhere near it
    // before trusting the sign.
    float100 lhs = float100(u) * log(float100(u)) / log(float100(2));
    float100 diff = lhs - float100(rhs);
    if (abs(diff) < 1e-40) throw std::logic_error("counting bound: threshold too close to decide");
    return diff > 0;
}

int64_t min_size_injective_bound(int n) {
    if (n < 1 || n > (1 << 20))
        throw std::invalid_argument("injective bound supports 1 <= n <= 2^20");
    return first_holding(1, n, injective_bound_holds);
}

int64_t counting_bound_size(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("counting bound supports 1 <= n <= 30");
    return first_holding(0, n, counting_bound_holds);
}

}  // namespace gh
