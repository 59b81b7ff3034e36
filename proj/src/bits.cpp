#include "gh/bits.hpp"

#include <stdexcept>

namespace gh {

uint32_t parse_bits(const std::string& s, int n) {
    if (n < 0 || n > 31) throw std::invalid_argument("bit length out of range: " + std::to_string(n));
    if ((int)s.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " bits, got \"" + s + "\"");
    uint32_t v = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("invalid bit character in \"" + s + "\"");
        v = (v << 1) | (c == '1');
    }
    return v;
}

std::string format_bits(uint32_t v, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; i++)
        if ((v >> i) & 1u) s[n - 1 - i] = '1';
    return s;
}

}  // namespace gh
