#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gh/game.hpp"

namespace gh {

// Reversible, input-oblivious, space-bounded Turing machines and their
// compilation into garden-hose games.
//
// Tape model: one read-only input tape holding x‖y at positions 1..2n with
// end sentinels '$' at positions 0 and 2n+1, plus work_tapes bounded work
// tapes with cells 1..worklen (sentinels at 0 and worklen+1, initially all
// blank '_'). A declared worklen of 0 means "auto": it is bound to n when
// the machine runs. Heads start at position 1.

enum class Move : int { left = -1, stay = 0, right = 1 };

// One transition row: (state, input symbol, work symbols) ->
// (state, work writes, input move, work moves). Sentinel cells are
// read-only, so a row reading '$' on a work tape must write '$' back.
struct TMRule {
    std::string state;
    char input_sym = '0';
    std::string work_syms;  // one character per work tape
    std::string next_state;
    std::string work_writes;
    Move input_move = Move::stay;
    std::vector<Move> work_moves;
    bool operator==(const TMRule&) const = default;
};

struct TMSpec {
    int work_tapes = 0;
    int worklen = 0;        // cells per work tape; 0 = auto (n at run time)
    std::string alphabet;   // work alphabet; must contain '_', never '$'
    std::string start, accept, reject;
    std::vector<TMRule> rules;

    // nullptr when no row matches (the machine is stuck).
    const TMRule* find_rule(const std::string& st, char input, const std::string& work) const;
    bool operator==(const TMSpec&) const = default;
};

// Everything the machine can change: state, head positions, and work-tape
// contents (cells 1..worklen per tape). The read-only input content is not
// part of a configuration.
struct Configuration {
    std::string state;
    int input_head = 1;
    std::vector<int> work_heads;
    std::vector<std::string> work;
    auto operator<=>(const Configuration&) const = default;
};

std::string config_to_string(const Configuration& c);
Configuration start_configuration(const TMSpec& m, int n);

// All simulation faults (missing transition, head off a tape, exhausted
// step budget) surface as this type.
struct TMRunError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr uint64_t kDefaultTMBudget = 1u << 20;

struct RunResult {
    bool accepted = false;
    uint64_t steps = 0;
};

RunResult run_tm(const TMSpec& m, int n, uint32_t x, uint32_t y,
                 uint64_t budget = kDefaultTMBudget);

// A boundary crossing: the input head moved between positions n and n+1.
// `into` is the side the head landed on; `config` is the snapshot after
// that move, `step` the 1-based index of the move.
struct Crossing {
    uint64_t step = 0;
    Side into = Side::alice;
    Configuration config;
};

struct TraceResult {
    bool accepted = false;
    uint64_t steps = 0;
    std::vector<int> input_heads;    // head position before step 1, then after each step
    std::vector<Crossing> crossings;
};

TraceResult trace_tm(const TMSpec& m, int n, uint32_t x, uint32_t y,
                     uint64_t budget = kDefaultTMBudget);

struct TMCheckReport {
    bool ok = true;
    std::string problem;
};

// Empirical check over all 2^(2n) inputs that (a) within each observed run
// no two distinct configurations step to the same successor and (b) the
// input-head position sequence is the same for every input.
TMCheckReport check_reversible_oblivious(const TMSpec& m, int n,
                                         uint64_t budget = kDefaultTMBudget);

// Crossing configurations observed over all inputs: C_A holds snapshots
// with the head at n arriving from n+1, C_B the reverse direction. Both
// are duplicate-free and canonically ordered.
struct CrossingSets {
    std::vector<Configuration> c_a, c_b;
};

CrossingSets crossing_sets(const TMSpec& m, int n,
                           uint64_t budget = kDefaultTMBudget);

// Two player segments needed the same end of one configuration pipe; this
// only happens when the machine is not actually reversible.
struct WiringCollision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Compiles the machine into a game computing f(x,y) = 1 iff it accepts
// x‖y. Pipes: one per crossing configuration plus ACCEPT/REJECT banks
// sized by worst-case per-input usage. Alice simulates over positions
// 0..n (tap segment plus one per C_A pipe), Bob over n+1..2n+1.
GardenHoseGame compile_tm(const TMSpec& m, int n,
                          uint64_t budget = kDefaultTMBudget);

// Bundled sample machines. The parity machine accepts iff x‖y has odd
// weight; the EQ machine accepts iff x = y (worklen auto). The collision
// machine passes the empirical checks but merges two crossing
// configurations on the way back, so compiling it must fail.
TMSpec make_parity_machine();
TMSpec make_eq_machine();
TMSpec make_collision_machine();

struct TMParseError : std::runtime_error {
    TMParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    int line;
};

std::string serialize_tm(const TMSpec& m);
TMSpec parse_tm(const std::string& text);
TMSpec load_tm(const std::string& path);
void save_tm(const TMSpec& m, const std::string& path);

}  // namespace gh
