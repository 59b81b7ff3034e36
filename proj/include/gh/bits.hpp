#pragma once

#include <cstdint>
#include <string>

namespace gh {

// Bitstring convention used everywhere: MSB-first, bit index 1 is the
// leftmost character. The packed form of "011" (n=3) is 0b011 = 3, and
// bit_at(3, 3, 1) == 0.
uint32_t parse_bits(const std::string& s, int n);
std::string format_bits(uint32_t v, int n);

inline int bit_at(uint32_t v, int n, int i) { return (v >> (n - i)) & 1u; }

}  // namespace gh
