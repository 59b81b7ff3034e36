#include "gh/tm.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "gh/bits.hpp"

namespace gh {

const TMRule* TMSpec::find_rule(const std::string& st, char input,
                                const std::string& work) const {
    for (const TMRule& r : rules)
        if (r.state == st && r.input_sym == input && r.work_syms == work) return &r;
    return nullptr;
}

std::string config_to_string(const Configuration& c) {
    std::ostringstream os;
    os << "{" << c.state << " in=" << c.input_head;
    for (size_t t = 0; t < c.work.size(); t++)
        os << " t" << t + 1 << "@" << c.work_heads[t] << "=" << c.work[t];
    os << "}";
    return os.str();
}

Configuration start_configuration(const TMSpec& m, int n) {
    int wl = m.worklen > 0 ? m.worklen : n;
    Configuration c;
    c.state = m.start;
    c.input_head = 1;
    c.work_heads.assign(m.work_tapes, 1);
    c.work.assign(m.work_tapes, std::string(wl, '_'));
    return c;
}

namespace {

enum class SegEnd { crossed, accepted, rejected, aborted };

struct SimResult {
    SegEnd end = SegEnd::accepted;
    Configuration config;
    uint64_t steps = 0;
};

// Observer sees (before, after, step index); returning false aborts the run.
using StepObserver =
    std::function<bool(const Configuration&, const Configuration&, uint64_t)>;

// One engine drives full runs, traced runs, and the one-sided segment
// simulations used by compile_tm. The input head is confined to [lo, hi];
// landing outside ends the run as `crossed`. Full runs use [0, 2n+1], which
// the head cannot leave without falling off the tape.
SimResult simulate(const TMSpec& m, int n, uint32_t x, uint32_t y,
                   Configuration c, int lo, int hi, uint64_t budget,
                   std::vector<int>* heads, std::vector<Crossing>* crossings,
                   const StepObserver& obs) {
    int wl = m.worklen > 0 ? m.worklen : n;
    auto input_at = [&](int p) -> char {
        if (p == 0 || p == 2 * n + 1) return '$';
        if (p <= n) return bit_at(x, n, p) ? '1' : '0';
        return bit_at(y, n, p - n) ? '1' : '0';
    };
    auto work_at = [&](int t) -> char {
        int p = c.work_heads[t];
        return (p == 0 || p == wl + 1) ? '$' : c.work[t][p - 1];
    };

    if (heads) heads->push_back(c.input_head);
    uint64_t steps = 0;
    std::string wsyms(m.work_tapes, ' ');
    while (true) {
        if (c.state == m.accept) return {SegEnd::accepted, c, steps};
        if (c.state == m.reject) return {SegEnd::rejected, c, steps};
        if (steps >= budget) throw TMRunError("step budget exceeded");

        char in = input_at(c.input_head);
        for (int t = 0; t < m.work_tapes; t++) wsyms[t] = work_at(t);
        const TMRule* r = m.find_rule(c.state, in, wsyms);
        if (!r)
            throw TMRunError("no transition for state " + c.state + " reading '" +
                             std::string(1, in) + "' / work '" + wsyms + "'");

        Configuration before;
        if (obs) before = c;
        int prev = c.input_head;
        for (int t = 0; t < m.work_tapes; t++) {
            int p = c.work_heads[t];
            if (p >= 1 && p <= wl) c.work[t][p - 1] = r->work_writes[t];
            p += static_cast<int>(r->work_moves[t]);
            if (p < 0 || p > wl + 1)
                throw TMRunError("space bound violated: work head " +
                                 std::to_string(t + 1) + " left the tape");
            c.work_heads[t] = p;
        }
        c.input_head += static_cast<int>(r->input_move);
        if (c.input_head < 0 || c.input_head > 2 * n + 1)
            throw TMRunError("input head moved off the tape");
        c.state = r->next_state;
        steps++;

        if (heads) heads->push_back(c.input_head);
        if (crossings) {
            if (prev == n + 1 && c.input_head == n)
                crossings->push_back({steps, Side::alice, c});
            else if (prev == n && c.input_head == n + 1)
                crossings->push_back({steps, Side::bob, c});
        }
        if (obs && !obs(before, c, steps)) return {SegEnd::aborted, c, steps};
        if (c.input_head < lo || c.input_head > hi) return {SegEnd::crossed, c, steps};
    }
}

void check_run_inputs(const TMSpec& m, int n, uint32_t x, uint32_t y) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (n < 32 && (x >> n || y >> n)) throw std::invalid_argument("input out of range");
    if (m.work_tapes < 0 || (m.work_tapes > 0 && m.alphabet.find('_') == std::string::npos))
        throw std::invalid_argument("malformed machine: bad work-tape declaration");
}

}  // namespace

RunResult run_tm(const TMSpec& m, int n, uint32_t x, uint32_t y, uint64_t budget) {
    check_run_inputs(m, n, x, y);
    SimResult r = simulate(m, n, x, y, start_configuration(m, n), 0, 2 * n + 1,
                           budget, nullptr, nullptr, nullptr);
    return {r.end == SegEnd::accepted, r.steps};
}

TraceResult trace_tm(const TMSpec& m, int n, uint32_t x, uint32_t y, uint64_t budget) {
    check_run_inputs(m, n, x, y);
    TraceResult tr;
    SimResult r = simulate(m, n, x, y, start_configuration(m, n), 0, 2 * n + 1,
                           budget, &tr.input_heads, &tr.crossings, nullptr);
    tr.accepted = r.end == SegEnd::accepted;
    tr.steps = r.steps;
    return tr;
}

TMCheckReport check_reversible_oblivious(const TMSpec& m, int n, uint64_t budget) {
    std::vector<int> ref_heads;
    for (uint32_t x = 0; x < (1u << n); x++)
        for (uint32_t y = 0; y < (1u << n); y++) {
            // successor -> predecessor over this run; a re-entry from a
            // different predecessor is the reversibility violation.
            std::map<Configuration, Configuration> pred_of;
            std::string problem;
            auto obs = [&](const Configuration& before, const Configuration& after,
                           uint64_t) {
                auto [it, fresh] = pred_of.try_emplace(after, before);
                if (!fresh && it->second != before) {
                    problem = "reversibility violation on x=" + format_bits(x, n) +
                              " y=" + format_bits(y, n) + ": " +
                              config_to_string(it->second) + " and " +
                              config_to_string(before) + " both step to " +
                              config_to_string(after);
                    return false;
                }
                return true;
            };
            std::vector<int> heads;
            SimResult r = simulate(m, n, x, y, start_configuration(m, n), 0,
                                   2 * n + 1, budget, &heads, nullptr, obs);
            if (r.end == SegEnd::aborted) return {false, problem};
            if (x == 0 && y == 0) {
                ref_heads = heads;
            } else if (heads != ref_heads) {
                std::string why = heads.size() != ref_heads.size()
                                      ? "run length " + std::to_string(heads.size() - 1) +
                                            " vs " + std::to_string(ref_heads.size() - 1)
                                      : "";
                for (size_t i = 0; why.empty() && i < heads.size(); i++)
                    if (heads[i] != ref_heads[i])
                        why = "position " + std::to_string(heads[i]) + " vs " +
                              std::to_string(ref_heads[i]) + " after step " +
                              std::to_string(i);
                return {false, "obliviousness violation on x=" + format_bits(x, n) +
                                   " y=" + format_bits(y, n) +
                                   ": input-head motion differs from x=0 y=0 (" + why + ")"};
            }
        }
    return {};
}

CrossingSets crossing_sets(const TMSpec& m, int n, uint64_t budget) {
    std::set<Configuration> a, b;
    for (uint32_t x = 0; x < (1u << n); x++)
        for (uint32_t y = 0; y < (1u << n); y++) {
            std::vector<Crossing> cr;
            simulate(m, n, x, y, start_configuration(m, n), 0, 2 * n + 1, budget,
                     nullptr, &cr, nullptr);
            for (const Crossing& c : cr)
                (c.into == Side::alice ? a : b).insert(c.config);
        }
    return {{a.begin(), a.end()}, {b.begin(), b.end()}};
}

GardenHoseGame compile_tm(const TMSpec& m, int n, uint64_t budget) {
    if (n < 1 || n > 10) throw std::invalid_argument("compile_tm supports 1 <= n <= 10");
    CrossingSets cs = crossing_sets(m, n, budget);
    const int na = static_cast<int>(cs.c_a.size());
    const int nb = static_cast<int>(cs.c_b.size());

    // Pipe layout: 1..na are C_A pipes, na+1..na+nb are C_B pipes, then the
    // ACCEPT bank (Alice-fed) and the REJECT bank (Bob-fed).
    std::map<Configuration, int> apipe, bpipe;
    for (int i = 0; i < na; i++) apipe[cs.c_a[i]] = 1 + i;
    for (int j = 0; j < nb; j++) bpipe[cs.c_b[j]] = 1 + na + j;

    struct Seg {
        int source;      // vertex on the simulating player's side
        SegEnd end;
        int target = 0;  // opposite-set pipe when crossed; 0 = dead end
    };

    // A segment continues the run from a crossing snapshot using one
    // player's half. Combinations never observed in a full run may cross
    // into an unlabeled configuration; they get no hose (never reached by
    // water), but two segments needing the same labeled pipe are a genuine
    // reversibility failure.
    auto run_side = [&](Side side, uint32_t half) {
        std::vector<Seg> segs;
        auto push = [&](int source, const Configuration& from) {
            SimResult r =
                side == Side::alice
                    ? simulate(m, n, half, 0, from, 0, n, budget, nullptr, nullptr, nullptr)
                    : simulate(m, n, 0, half, from, n + 1, 2 * n + 1, budget, nullptr,
                               nullptr, nullptr);
            Seg s{source, r.end, 0};
            if (r.end == SegEnd::crossed) {
                auto& opposite = side == Side::alice ? bpipe : apipe;
                auto it = opposite.find(r.config);
                if (it != opposite.end()) {
                    for (const Seg& prev : segs)
                        if (prev.target == it->second)
                            throw WiringCollision(
                                (side == Side::alice ? "alice" : "bob") +
                                std::string(" wiring collision at input ") +
                                format_bits(half, n) + ": two segments continue into " +
                                config_to_string(r.config));
                    s.target = it->second;
                }
            }
            segs.push_back(s);
        };
        if (side == Side::alice) {
            push(0, start_configuration(m, n));
            for (const Configuration& c : cs.c_a) push(apipe[c], c);
        } else {
            for (const Configuration& c : cs.c_b) push(bpipe[c], c);
        }
        return segs;
    };

    std::vector<std::vector<Seg>> asegs(1u << n), bsegs(1u << n);
    int acc_bank = 0, rej_bank = 0;
    for (uint32_t x = 0; x < (1u << n); x++) {
        asegs[x] = run_side(Side::alice, x);
        int acc = 0;
        for (const Seg& s : asegs[x]) acc += s.end == SegEnd::accepted;
        acc_bank = std::max(acc_bank, acc);
    }
    for (uint32_t y = 0; y < (1u << n); y++) {
        bsegs[y] = run_side(Side::bob, y);
        int rej = 0;
        for (const Seg& s : bsegs[y]) rej += s.end == SegEnd::rejected;
        rej_bank = std::max(rej_bank, rej);
    }

    const int accept_base = na + nb;            // ACCEPT pipes accept_base+1 ..
    const int reject_base = na + nb + acc_bank; // REJECT pipes reject_base+1 ..
    GardenHoseGame g;
    g.n = n;
    g.s = na + nb + acc_bank + rej_bank;

    auto atab = std::make_shared<std::vector<Matching>>(1u << n);
    auto btab = std::make_shared<std::vector<Matching>>(1u << n);
    for (uint32_t x = 0; x < (1u << n); x++) {
        int next_acc = 0;
        for (const Seg& s : asegs[x]) {
            if (s.end == SegEnd::accepted)
                (*atab)[x].add(s.source, accept_base + ++next_acc);
            else if (s.target)
                (*atab)[x].add(s.source, s.target);
            // rejected or dead: leave the source open, water exits on Alice's side
        }
    }
    for (uint32_t y = 0; y < (1u << n); y++) {
        int next_rej = 0;
        for (const Seg& s : bsegs[y]) {
            if (s.end == SegEnd::rejected)
                (*btab)[y].add(s.source, reject_base + ++next_rej);
            else if (s.target)
                (*btab)[y].add(s.source, s.target);
            // accepted or dead: leave open, water exits on Bob's side
        }
    }
    g.alice = [atab](uint32_t x) { return atab->at(x); };
    g.bob = [btab](uint32_t y) { return btab->at(y); };
    return g;
}

// --- bundled machines -------------------------------------------------------

namespace {

TMSpec one_tape_machine(const std::string& start, std::vector<TMRule> rules) {
    TMSpec m;
    m.work_tapes = 1;
    m.worklen = 1;
    m.alphabet = "_01";
    m.start = start;
    m.accept = "acc";
    m.reject = "rej";
    m.rules = std::move(rules);
    return m;
}

TMRule row(const std::string& st, char in, const std::string& ws,
           const std::string& next, const std::string& ww, char im,
           const std::string& wm) {
    auto mv = [](char ch) {
        return ch == 'L' ? Move::left : ch == 'R' ? Move::right : Move::stay;
    };
    TMRule r;
    r.state = st;
    r.input_sym = in;
    r.work_syms = ws;
    r.next_state = next;
    r.work_writes = ww;
    r.input_move = mv(im);
    for (char ch : wm) r.work_moves.push_back(mv(ch));
    return r;
}

}  // namespace

TMSpec make_parity_machine() {
    // Sweep right accumulating the running parity in the state; the work
    // tape is declared but parked. Accepts iff x‖y has odd weight.
    return one_tape_machine("p0", {
        row("p0", '0', "_", "p0", "_", 'R', "S"),
        row("p0", '1', "_", "p1", "_", 'R', "S"),
        row("p1", '0', "_", "p1", "_", 'R', "S"),
        row("p1", '1', "_", "p0", "_", 'R', "S"),
        row("p0", '$', "_", "rej", "_", 'S', "S"),
        row("p1", '$', "_", "acc", "_", 'S', "S"),
    });
}

TMSpec make_eq_machine() {
    // Copy x onto the work tape (the work sentinel marks the halfway point),
    // rewind, then compare the work tape against y cell by cell. A mismatch
    // switches to `bad`, which keeps the same head motion so the machine
    // stays oblivious.
    TMSpec m = one_tape_machine("cp", {
        row("cp", '0', "_", "cp", "0", 'R', "R"),
        row("cp", '1', "_", "cp", "1", 'R', "R"),
        row("cp", '0', "$", "rw", "$", 'S', "L"),
        row("cp", '1', "$", "rw", "$", 'S', "L"),
        row("rw", '0', "0", "rw", "0", 'S', "L"),
        row("rw", '0', "1", "rw", "1", 'S', "L"),
        row("rw", '1', "0", "rw", "0", 'S', "L"),
        row("rw", '1', "1", "rw", "1", 'S', "L"),
        row("rw", '0', "$", "cmp", "$", 'S', "R"),
        row("rw", '1', "$", "cmp", "$", 'S', "R"),
        row("cmp", '0', "0", "cmp", "0", 'R', "R"),
        row("cmp", '1', "1", "cmp", "1", 'R', "R"),
        row("cmp", '0', "1", "bad", "1", 'R', "R"),
        row("cmp", '1', "0", "bad", "0", 'R', "R"),
        row("bad", '0', "0", "bad", "0", 'R', "R"),
        row("bad", '0', "1", "bad", "1", 'R', "R"),
        row("bad", '1', "0", "bad", "0", 'R', "R"),
        row("bad", '1', "1", "bad", "1", 'R', "R"),
        row("cmp", '$', "$", "acc", "$", 'S', "S"),
        row("bad", '$', "$", "rej", "$", 'S', "S"),
    });
    m.worklen = 0;  // auto: n cells
    return m;
}

TMSpec make_collision_machine() {
    // Remembers x's first bit in the state (qA/qB), sweeps to the right
    // sentinel, then both states merge into qM for the sweep back. Each
    // single run looks reversible, but the two return crossings share one
    // configuration, so compilation hits a wiring collision.
    return one_tape_machine("q0", {
        row("q0", '0', "_", "qA", "_", 'R', "S"),
        row("q0", '1', "_", "qB", "_", 'R', "S"),
        row("qA", '0', "_", "qA", "_", 'R', "S"),
        row("qA", '1', "_", "qA", "_", 'R', "S"),
        row("qA", '$', "_", "qM", "_", 'L', "S"),
        row("qB", '0', "_", "qB", "_", 'R', "S"),
        row("qB", '1', "_", "qB", "_", 'R', "S"),
        row("qB", '$', "_", "qM", "_", 'L', "S"),
        row("qM", '0', "_", "qM", "_", 'L', "S"),
        row("qM", '1', "_", "qM", "_", 'L', "S"),
        row("qM", '$', "_", "acc", "_", 'S', "S"),
    });
}

// --- text format -------------------------------------------------------------

namespace {

char move_char(Move mv) {
    return mv == Move::left ? 'L' : mv == Move::right ? 'R' : 'S';
}

}  // namespace

std::string serialize_tm(const TMSpec& m) {
    std::ostringstream os;
    os << "tm worktapes=" << m.work_tapes << " worklen=";
    if (m.worklen == 0)
        os << "auto";
    else
        os << m.worklen;
    os << " alphabet=" << m.alphabet << "\n";
    os << "start " << m.start << "\n";
    os << "accept " << m.accept << "\n";
    os << "reject " << m.reject << "\n";
    for (const TMRule& r : m.rules) {
        os << "rule " << r.state << " " << r.input_sym << " "
           << (r.work_syms.empty() ? "-" : r.work_syms) << " -> " << r.next_state
           << " " << (r.work_writes.empty() ? "-" : r.work_writes) << " "
           << move_char(r.input_move) << " ";
        if (r.work_moves.empty()) {
            os << "-";
        } else {
            for (Move mv : r.work_moves) os << move_char(mv);
        }
        os << "\n";
    }
    return os.str();
}

namespace {

std::vector<std::string> tm_tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

Move parse_move(char ch, int line) {
    switch (ch) {
        case 'L': return Move::left;
        case 'R': return Move::right;
        case 'S': return Move::stay;
        default: throw TMParseError(line, std::string("bad move '") + ch + "'");
    }
}

}  // namespace

TMSpec parse_tm(const std::string& text) {
    TMSpec m;
    bool have_header = false, have_start = false, have_accept = false, have_reject = false;
    std::set<std::tuple<std::string, char, std::string>> keys;

    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        lineno++;
        std::string line = raw.substr(0, raw.find('#'));
        auto tok = tm_tokens(line);
        if (tok.empty()) continue;

        if (tok[0] == "tm") {
            if (have_header) throw TMParseError(lineno, "duplicate header");
            have_header = true;
            for (size_t i = 1; i < tok.size(); i++) {
                auto eq = tok[i].find('=');
                if (eq == std::string::npos)
                    throw TMParseError(lineno, "expected key=value, got '" + tok[i] + "'");
                std::string key = tok[i].substr(0, eq), val = tok[i].substr(eq + 1);
                try {
                    if (key == "worktapes") {
                        m.work_tapes = std::stoi(val);
                    } else if (key == "worklen") {
                        m.worklen = val == "auto" ? 0 : std::stoi(val);
                        if (val != "auto" && m.worklen < 1)
                            throw TMParseError(lineno, "worklen must be positive or auto");
                    } else if (key == "alphabet") {
                        m.alphabet = val;
                    } else {
                        throw TMParseError(lineno, "unknown header key '" + key + "'");
                    }
                } catch (const std::invalid_argument&) {
                    throw TMParseError(lineno, "bad number '" + val + "'");
                }
            }
            if (m.work_tapes < 0) throw TMParseError(lineno, "worktapes must be >= 0");
            if (m.work_tapes > 0 && m.alphabet.find('_') == std::string::npos)
                throw TMParseError(lineno, "alphabet must contain the blank '_'");
            if (m.alphabet.find('$') != std::string::npos)
                throw TMParseError(lineno, "'$' is the reserved sentinel symbol");
            continue;
        }
        if (!have_header) throw TMParseError(lineno, "expected 'tm' header first");

        if (tok[0] == "start" || tok[0] == "accept" || tok[0] == "reject") {
            if (tok.size() != 2)
                throw TMParseError(lineno, "expected '" + tok[0] + " <state>'");
            bool& seen = tok[0] == "start" ? have_start
                         : tok[0] == "accept" ? have_accept
                                              : have_reject;
            if (seen) throw TMParseError(lineno, "duplicate '" + tok[0] + "' line");
            seen = true;
            (tok[0] == "start" ? m.start : tok[0] == "accept" ? m.accept : m.reject) = tok[1];
            continue;
        }
        if (tok[0] != "rule")
            throw TMParseError(lineno, "unknown directive '" + tok[0] + "'");
        if (tok.size() != 9 || tok[4] != "->")
            throw TMParseError(lineno,
                               "expected 'rule <state> <in> <work> -> <state> <write> <imove> <wmoves>'");

        TMRule r;
        r.state = tok[1];
        if (tok[2].size() != 1 || std::string("01$").find(tok[2][0]) == std::string::npos)
            throw TMParseError(lineno, "input symbol must be 0, 1 or $");
        r.input_sym = tok[2][0];
        r.work_syms = tok[3] == "-" ? "" : tok[3];
        r.next_state = tok[5];
        r.work_writes = tok[6] == "-" ? "" : tok[6];
        if (tok[7].size() != 1) throw TMParseError(lineno, "bad input move");
        r.input_move = parse_move(tok[7][0], lineno);
        if (tok[8] != "-")
            for (char ch : tok[8]) r.work_moves.push_back(parse_move(ch, lineno));

        if (static_cast<int>(r.work_syms.size()) != m.work_tapes ||
            static_cast<int>(r.work_writes.size()) != m.work_tapes ||
            static_cast<int>(r.work_moves.size()) != m.work_tapes)
            throw TMParseError(lineno, "rule arity does not match worktapes=" +
                                           std::to_string(m.work_tapes));
        for (int t = 0; t < m.work_tapes; t++) {
            bool sym_ok = r.work_syms[t] == '$' ||
                          m.alphabet.find(r.work_syms[t]) != std::string::npos;
            bool write_ok = r.work_writes[t] == '$' ||
                            m.alphabet.find(r.work_writes[t]) != std::string::npos;
            if (!sym_ok || !write_ok)
                throw TMParseError(lineno, "work symbol outside the declared alphabet");
            if ((r.work_syms[t] == '$') != (r.work_writes[t] == '$'))
                throw TMParseError(lineno, "sentinel cells are read-only");
        }
        if (!keys.insert({r.state, r.input_sym, r.work_syms}).second)
            throw TMParseError(lineno, "duplicate rule for (" + r.state + ", " +
                                           std::string(1, r.input_sym) + ", " +
                                           (r.work_syms.empty() ? "-" : r.work_syms) + ")");
        m.rules.push_back(std::move(r));
    }

    if (!have_header) throw TMParseError(lineno, "missing 'tm' header");
    if (!have_start || !have_accept || !have_reject)
        throw TMParseError(lineno, "missing start/accept/reject declaration");
    if (m.accept == m.reject) throw TMParseError(lineno, "accept and reject must differ");
    return m;
}

TMSpec load_tm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_tm(ss.str());
}

void save_tm(const TMSpec& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << serialize_tm(m);
}

}  // namespace gh
