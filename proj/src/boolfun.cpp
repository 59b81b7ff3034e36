#include "gh/boolfun.hpp"

#include <bit>
#include <memory>
#include <stdexcept>

namespace gh {

BooleanFunction bf_const(int n, bool value) {
    return {n, [value](uint32_t, uint32_t) { return value; }};
}

BooleanFunction bf_and(int n) {
    const uint32_t all = (1u << n) - 1;
    return {n, [all](uint32_t x, uint32_t y) { return x == all && y == all; }};
}

BooleanFunction bf_or(int n) {
    return {n, [](uint32_t x, uint32_t y) { return (x | y) != 0; }};
}

BooleanFunction bf_xor(int n) {
    return {n, [](uint32_t x, uint32_t y) { return std::popcount(x ^ y) & 1; }};
}

BooleanFunction bf_eq(int n) {
    return {n, [](uint32_t x, uint32_t y) { return x == y; }};
}

BooleanFunction bf_ip(int n) {
    return {n, [](uint32_t x, uint32_t y) { return std::popcount(x & y) & 1; }};
}

BooleanFunction bf_maj(int n) {
    if (n % 2 != 0) throw std::invalid_argument("maj requires even n");
    const int threshold = n / 2 + 1;
    return {n, [threshold](uint32_t x, uint32_t y) { return std::popcount(x & y) >= threshold; }};
}

BooleanFunction bf_from_table(int n, std::vector<char> table) {
    if (table.size() != (size_t)1 << (2 * n))
        throw std::invalid_argument("truth table must have 2^(2n) entries");
    auto t = std::make_shared<std::vector<char>>(std::move(table));
    return {n, [t, n](uint32_t x, uint32_t y) { return (*t)[((size_t)x << n) | y] != 0; }};
}

std::vector<char> truth_table(const BooleanFunction& f) {
    const uint32_t count = 1u << f.n;
    std::vector<char> t;
    t.reserve((size_t)count * count);
    for (uint32_t x = 0; x < count; x++)
        for (uint32_t y = 0; y < count; y++) t.push_back(f(x, y) ? 1 : 0);
    return t;
}

BooleanFunction bf_named(const std::string& name, int n) {
    if (name == "const0") return bf_const(n, false);
    if (name == "const1") return bf_const(n, true);
    if (name == "and") return bf_and(n);
    if (name == "or") return bf_or(n);
    if (name == "xor") return bf_xor(n);
    if (name == "eq") return bf_eq(n);
    if (name == "ip") return bf_ip(n);
    if (name == "maj") return bf_maj(n);
    throw std::invalid_argument("unknown function name: " + name);
}

}  // namespace gh
