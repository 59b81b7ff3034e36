#pragma once

#include <stdexcept>
#include <string>

#include "gh/game.hpp"

namespace gh {

// Text format for materialized games:
//
//   ghgame n=1 s=3
//   alice x=0: 0-1
//   alice x=1: 0-2
//   bob y=0: 1-3
//   bob y=1: 2-3
//
// One block per input value, edges "u-v" comma-separated after the colon,
// empty matchings leave the rest of the line blank. '#' starts a comment.
// Every x and every y must appear exactly once.

struct GameParseError : std::runtime_error {
    int line;
    GameParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

GardenHoseGame parse_game(const std::string& text);
std::string serialize_game(const GardenHoseGame& g);

GardenHoseGame load_game(const std::string& path);
void save_game(const GardenHoseGame& g, const std::string& path);

}  // namespace gh
