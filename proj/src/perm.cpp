#include "gh/perm.hpp"

#include <stdexcept>

namespace gh {

bool Perm::is_five_cycle() const {
    int a = 1;
    for (int step = 0; step < 5; step++) {
        a = (*this)(a);
        if (a == 1) return step == 4;
    }
    return false;
}

std::string Perm::cycle_string() const {
    std::string out;
    bool seen[6] = {};
    for (int a = 1; a <= 5; a++) {
        if (seen[a] || (*this)(a) == a) continue;
        out += "(";
        int b = a;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(b);
            seen[b] = true;
            b = (*this)(b);
            first = false;
        } while (b != a);
        out += ")";
    }
    return out.empty() ? "e" : out;
}

Perm five_cycle(const std::array<int, 5>& c) {
    Perm p;
    for (int i = 0; i < 5; i++) p.img[c[i] - 1] = (uint8_t)c[(i + 1) % 5];
    if (!p.is_five_cycle()) throw std::invalid_argument("five_cycle: entries must be a permutation of 1..5");
    return p;
}

Perm conjugator(const Perm& mu, const Perm& target) {
    if (!mu.is_five_cycle() || !target.is_five_cycle())
        throw std::invalid_argument("conjugator requires five-cycles");
    // Align the cycles: theta maps target's orbit of 1 onto mu's orbit of 1,
    // giving theta(target(a)) = mu(theta(a)), i.e. target = theta mu theta^-1.
    Perm theta;
    int m = 1, t = 1;
    for (int i = 0; i < 5; i++) {
        theta.img[t - 1] = (uint8_t)m;
        m = mu(m);
        t = target(t);
    }
    return theta;
}

}  // namespace gh
