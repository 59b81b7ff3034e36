#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gh {

// Two-player Boolean function f(x, y) on n bits per player.
struct BooleanFunction {
    int n = 0;
    std::function<bool(uint32_t, uint32_t)> f;
    bool operator()(uint32_t x, uint32_t y) const { return f(x, y); }
};

BooleanFunction bf_const(int n, bool value);
BooleanFunction bf_and(int n);   // all 2n bits set
BooleanFunction bf_or(int n);    // any bit set
BooleanFunction bf_xor(int n);   // parity of x XOR y (for n=1: x != y)
BooleanFunction bf_eq(int n);    // x == y
BooleanFunction bf_ip(int n);    // inner product <x,y> mod 2
BooleanFunction bf_maj(int n);   // sum_i x_i y_i >= n/2 + 1, n even

// Truth-table form: 2^(2n) entries, row-major in x (index (x << n) | y).
BooleanFunction bf_from_table(int n, std::vector<char> table);
std::vector<char> truth_table(const BooleanFunction& f);

// Named lookup for the CLI: const0, const1, and, or, xor, eq, ip, maj.
BooleanFunction bf_named(const std::string& name, int n);

}  // namespace gh
