#include "gh/encoding.hpp"

namespace gh {

namespace {

void append16(std::string& out, int v) {
    for (int b = 15; b >= 0; b--) out.push_back((v >> b) & 1 ? '1' : '0');
}

// Reads the 16-bit field starting at bit offset `pos`.
int read16(const std::string& desc, size_t pos) {
    int v = 0;
    for (size_t i = pos; i < pos + 16; i++) {
        char c = desc[i];
        if (c != '0' && c != '1') throw EncodingError("encoding is not a bitstring");
        v = v << 1 | (c == '1');
    }
    return v;
}

struct ConnectionList {
    const std::string* desc;
    int s = 0;
    int count = 0;

    explicit ConnectionList(const std::string& d) : desc(&d) {
        if (d.size() < 32) throw EncodingError("encoding shorter than its header");
        s = read16(d, 0);
        count = read16(d, 16);
        if (d.size() != 32 + 32 * static_cast<size_t>(count))
            throw EncodingError("encoding length does not match the pair count");
    }
    int end(int pair, int which) const {
        return read16(*desc, 32 + 32 * static_cast<size_t>(pair) + 16 * which);
    }
    // Rescans the list for the hose partner of v; -1 when unmatched.
    int partner(int v) const {
        for (int p = 0; p < count; p++) {
            if (end(p, 0) == v) return end(p, 1);
            if (end(p, 1) == v) return end(p, 0);
        }
        return -1;
    }
    void validate(int lo) const {
        for (int p = 0; p < count; p++) {
            int a = end(p, 0), b = end(p, 1);
            if (a == b) throw EncodingError("self-loop in connection list");
            if (a < lo || b < lo || a > s || b > s)
                throw EncodingError("vertex outside 0..s / 1..s range");
            for (int q = p + 1; q < count; q++)
                if (end(q, 0) == a || end(q, 1) == a || end(q, 0) == b || end(q, 1) == b)
                    throw EncodingError("vertex used by two hoses");
        }
    }
};

}  // namespace

std::string encode_connections(const Matching& m, int s) {
    if (s < 0 || s > 0xffff) throw EncodingError("pipe count out of encodable range");
    std::string out;
    append16(out, s);
    append16(out, static_cast<int>(m.edges.size()));
    for (auto [u, v] : m.edges) {
        if (u < 0 || v < 0 || u > s || v > s)
            throw EncodingError("vertex outside 0..s range");
        append16(out, u);
        append16(out, v);
    }
    return out;
}

int eval_encoded(const std::string& alice_desc, const std::string& bob_desc) {
    ConnectionList alice(alice_desc), bob(bob_desc);
    if (alice.s != bob.s) throw EncodingError("pipe counts disagree");
    alice.validate(0);
    bob.validate(1);

    // Tap hose first, then alternate pipe traversal / hose hop. The cap can
    // only trigger on pathological input the validation cannot rule out.
    int v = alice.partner(0);
    if (v < 0) return 0;
    bool at_bob = false;
    for (int hops = 0; hops <= 2 * alice.s + 2; hops++) {
        at_bob = !at_bob;  // traverse pipe v
        int next = at_bob ? bob.partner(v) : alice.partner(v);
        if (next < 0) return at_bob ? 1 : 0;
        if (next == 0) throw EncodingError("water path returned to the tap");
        v = next;
    }
    throw EncodingError("water path does not terminate");
}

}  // namespace gh
