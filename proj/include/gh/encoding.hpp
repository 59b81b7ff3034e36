#pragma once

#include <stdexcept>
#include <string>

#include "gh/game.hpp"

namespace gh {

// Binary connection-list encoding of one player's hose matching: a 16-bit
// pipe count s, a 16-bit pair count, then each hose edge as two 16-bit
// vertex numbers, all MSB-first. The tap is vertex 0 and appears only in
// Alice's list.
std::string encode_connections(const Matching& m, int s);

struct EncodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Walks the water path over two encoded connection lists using working
// memory logarithmic in the encoding length: a few cursors and the current
// vertex, rescanning the lists on every hop. Returns f(x,y), i.e. 1 when
// the water exits on Bob's side. Throws EncodingError on malformed input.
int eval_encoded(const std::string& alice_desc, const std::string& bob_desc);

}  // namespace gh
