#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace gh {

// Permutation of {1..5}. Composition is left-to-right: (p * q) applies p
// first, so a program evaluates to the product of its instruction values in
// program order.
struct Perm {
    std::array<uint8_t, 5> img{1, 2, 3, 4, 5};  // img[a-1] = image of a

    int operator()(int a) const { return img[a - 1]; }
    bool operator==(const Perm&) const = default;

    Perm operator*(const Perm& q) const {
        Perm r;
        for (int a = 1; a <= 5; a++) r.img[a - 1] = q.img[img[a - 1] - 1];
        return r;
    }

    Perm inverse() const {
        Perm r;
        for (int a = 1; a <= 5; a++) r.img[img[a - 1] - 1] = a;
        return r;
    }

    bool is_identity() const { return *this == Perm{}; }
    bool is_five_cycle() const;
    std::string cycle_string() const;  // e.g. "(1 2 3 4 5)" or "e"
};

inline Perm identity_perm() { return Perm{}; }

// Builds the 5-cycle sending c[0] -> c[1] -> ... -> c[4] -> c[0].
Perm five_cycle(const std::array<int, 5>& c);

// Solves target = theta * mu * theta^{-1} (left-to-right products) for two
// five-cycles; any of the five alignments of the cycles works.
Perm conjugator(const Perm& mu, const Perm& target);

}  // namespace gh
