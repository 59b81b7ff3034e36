// ghc: command-line front end for the garden-hose library. Subcommands
// cover game construction, brute-force verification, the circuit and
// Turing-machine compilers, lower bounds, exhaustive search, and the
// teleportation attacks. Exit codes: 0 = success/verified, 1 = a check
// failed or found a counterexample, 2 = usage or input errors.
//
// Reports go to stdout and are byte-deterministic for fixed inputs and
// seed; wall time goes to stderr. GHC_THREADS caps OpenMP parallelism.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "gh/attack.hpp"
#include "gh/bits.hpp"
#include "gh/boolfun.hpp"
#include "gh/bounds.hpp"
#include "gh/circuit.hpp"
#include "gh/dot.hpp"
#include "gh/encoding.hpp"
#include "gh/game.hpp"
#include "gh/gamefile.hpp"
#include "gh/mub.hpp"
#include "gh/pbp.hpp"
#include "gh/quantum.hpp"
#include "gh/search.hpp"
#include "gh/strategies.hpp"
#include "gh/tm.hpp"
#include "gh/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gh;

namespace {

constexpr const char* kSchema = "ghc-report/1";

// Every subcommand fills one of these: key/value lines for the text form
// and a mirrored JSON document for --json. Nothing time-dependent goes in.
struct Report {
    json doc;
    std::vector<std::string> lines;

    explicit Report(const std::string& command) {
        doc["schema"] = kSchema;
        doc["command"] = command;
        lines.push_back("command: " + command);
    }
    void field(const std::string& key, const json& value) {
        doc[key] = value;
        if (value.is_string()) {
            lines.push_back(key + ": " + value.get<std::string>());
        } else {
            lines.push_back(key + ": " + value.dump());
        }
    }
    void rows(const std::string& key, const std::vector<json>& cases,
              const std::vector<std::string>& case_lines) {
        doc[key] = cases;
        for (const auto& l : case_lines) lines.push_back(l);
    }
    void print(bool as_json) const {
        if (as_json) {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << kSchema << "\n";
            for (const auto& l : lines) std::cout << l << "\n";
        }
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A function argument is either one of the built-in names or a path to a
// truth-table file: 2^(2n) characters '0'/'1', row-major in x, whitespace
// ignored.
BooleanFunction resolve_fn(const std::string& spec, int n) {
    for (const char* name : {"const0", "const1", "and", "or", "xor", "eq", "ip", "maj"}) {
        if (spec == name) return bf_named(spec, n);
    }
    const std::string text = slurp(spec);
    std::vector<char> table;
    for (char c : text) {
        if (c == '0' || c == '1') {
            table.push_back(static_cast<char>(c - '0'));
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::runtime_error(spec + ": truth table may only contain 0, 1, whitespace");
        }
    }
    return bf_from_table(n, std::move(table));
}

std::string side_name(Side s) { return s == Side::alice ? "alice" : "bob"; }

std::string path_string(const WaterPath& p) {
    std::string out;
    for (size_t i = 0; i < p.verts.size(); ++i) {
        if (i) out += " -> ";
        out += std::to_string(p.verts[i].v);
        out += (p.verts[i].side == Side::alice) ? 'A' : 'B';
    }
    return out;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------- build ---

int cmd_build(const std::string& kind, int n, const std::string& fn_spec, bool optimized,
              const std::string& out_path, Report& rep) {
    GardenHoseGame g;
    if (kind == "xor") {
        if (n != 1) throw std::runtime_error("the xor builder is defined for --n 1 only");
        g = build_xor();
    } else if (kind == "eq") {
        g = build_eq(n);
    } else if (kind == "ip") {
        g = build_ip(n);
    } else if (kind == "maj") {
        g = build_maj(n, optimized);
    } else if (kind == "generic") {
        if (fn_spec.empty()) throw std::runtime_error("build generic needs --fn");
        g = build_generic(resolve_fn(fn_spec, n));
    } else {
        throw std::runtime_error("unknown builder: " + kind +
                                 " (expected xor, eq, ip, maj or generic)");
    }
    const ValidationReport v = validate_game(g);
    if (!v.ok) throw std::logic_error("builder produced an invalid game: " + v.problems.at(0));
    save_game(g, out_path);
    rep.field("kind", kind);
    rep.field("n", g.n);
    rep.field("size", g.s);
    rep.field("wrote", out_path);
    return 0;
}

// --------------------------------------------------------------- verify ---

int cmd_verify(const std::string& game_path, const std::string& fn_spec, Report& rep) {
    const GardenHoseGame g = load_game(game_path);
    const BooleanFunction f = resolve_fn(fn_spec, g.n);
    const VerifyResult r = computes(g, f);
    rep.field("game", game_path);
    rep.field("n", g.n);
    rep.field("size", g.s);
    rep.field("function", fn_spec);
    rep.field("cases", r.cases);
    if (r.ok) {
        rep.field("result", "ok");
        return 0;
    }
    rep.field("result", "counterexample");
    rep.field("x", format_bits(r.cx, g.n));
    rep.field("y", format_bits(r.cy, g.n));
    rep.field("want", f(r.cx, r.cy) ? 1 : 0);
    return 1;
}

// ----------------------------------------------------------------- eval ---

int cmd_eval(const std::string& game_path, const std::string& xbits, const std::string& ybits,
             bool logspace, Report& rep) {
    const GardenHoseGame g = load_game(game_path);
    const uint32_t x = parse_bits(xbits, g.n), y = parse_bits(ybits, g.n);
    const WaterPath p = flow(g, x, y);
    rep.field("game", game_path);
    rep.field("x", xbits);
    rep.field("y", ybits);
    rep.field("path", path_string(p));
    rep.field("terminal", side_name(p.terminal()));
    rep.field("value", p.terminal() == Side::bob ? 1 : 0);
    if (logspace) {
        const int v = eval_encoded(encode_connections(g.alice(x), g.s),
                                   encode_connections(g.bob(y), g.s));
        rep.field("logspace_value", v);
        if (v != (p.terminal() == Side::bob ? 1 : 0)) {
            rep.field("result", "mismatch");
            return 1;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- render ---

int cmd_render(const std::string& game_path, const std::string& xbits, const std::string& ybits,
               const std::string& out_path, bool as_json, Report& rep) {
    const GardenHoseGame g = load_game(game_path);
    const uint32_t x = parse_bits(xbits, g.n), y = parse_bits(ybits, g.n);
    const std::string dot = render_diagram(g, x, y);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write: " + out_path);
        out << dot;
        rep.field("game", game_path);
        rep.field("wrote", out_path);
        return 0;
    }
    if (as_json) {
        rep.field("game", game_path);
        rep.field("dot", dot);
        return 0;
    }
    // raw artifact on stdout, not a report
    std::cout << dot;
    rep.lines.clear();
    rep.doc.clear();
    return 0;
}

// ------------------------------------------------------- compile-circuit ---

int cmd_compile_circuit(const std::string& in_path, const std::string& out_path, Report& rep) {
    const Circuit c = parse_circuit(slurp(in_path));
    const Program prog = compile_circuit(c);
    const AltProgram alt = alternate(prog, c.n);
    const GardenHoseGame g = program_to_game(alt);
    save_game(g, out_path);
    rep.field("input", in_path);
    rep.field("n", c.n);
    rep.field("depth", c.depth());
    rep.field("program_length", prog.instrs.size());
    rep.field("layers", alt.steps.size());
    rep.field("size", g.s);
    rep.field("wrote", out_path);
    if (c.n > 10) {
        rep.field("verified", "skipped (n > 10)");
        return 0;
    }
    const BooleanFunction f{c.n, [&c](uint32_t x, uint32_t y) { return eval_circuit(c, x, y); }};
    const VerifyResult r = computes(g, f);
    if (r.ok) {
        rep.field("verified", "ok (" + std::to_string(r.cases) + " cases)");
        return 0;
    }
    rep.field("verified", "counterexample");
    rep.field("x", format_bits(r.cx, g.n));
    rep.field("y", format_bits(r.cy, g.n));
    return 1;
}

// ------------------------------------------------------------ compile-tm ---

int cmd_compile_tm(const std::string& in_path, int n, uint64_t budget,
                   const std::string& out_path, Report& rep) {
    const TMSpec m = load_tm(in_path);
    rep.field("input", in_path);
    rep.field("n", n);
    const TMCheckReport chk = check_reversible_oblivious(m, n, budget);
    if (!chk.ok) {
        rep.field("check", "failed: " + chk.problem);
        return 1;
    }
    rep.field("check", "ok");
    const CrossingSets cs = crossing_sets(m, n, budget);
    rep.field("crossings_alice", cs.c_a.size());
    rep.field("crossings_bob", cs.c_b.size());
    GardenHoseGame g;
    try {
        g = compile_tm(m, n, budget);
    } catch (const WiringCollision& e) {
        rep.field("error", std::string("wiring collision: ") + e.what());
        return 1;
    }
    save_game(g, out_path);
    rep.field("size", g.s);
    rep.field("wrote", out_path);
    const BooleanFunction f{
        n, [&m, n, budget](uint32_t x, uint32_t y) { return run_tm(m, n, x, y, budget).accepted; }};
    const VerifyResult r = computes_serial(g, f);  // run_tm is cheap, games are tiny
    if (r.ok) {
        rep.field("verified", "ok (" + std::to_string(r.cases) + " cases)");
        return 0;
    }
    rep.field("verified", "counterexample");
    rep.field("x", format_bits(r.cx, n));
    rep.field("y", format_bits(r.cy, n));
    return 1;
}

// --------------------------------------------------------------- bounds ---

int cmd_bounds_injective(int n, const std::string& fn_spec, Report& rep) {
    const BooleanFunction f = resolve_fn(fn_spec, n);
    rep.field("n", n);
    rep.field("function", fn_spec);
    rep.field("injective_alice", injective_for_alice(f));
    rep.field("injective_bob", injective_for_bob(f));
    return 0;
}

int cmd_bounds_lb(int n, Report& rep) {
    const int64_t s = min_size_injective_bound(n);
    rep.field("n", n);
    rep.field("min_size_injective_bound", s);
    rep.field("holds_at_s", injective_bound_holds(s, n));
    rep.field("holds_below", s > 0 ? injective_bound_holds(s - 1, n) : false);
    return 0;
}

int cmd_bounds_counting(int n, Report& rep) {
    const int64_t s = counting_bound_size(n);
    rep.field("n", n);
    rep.field("counting_bound_size", s);
    rep.field("holds_at_s", counting_bound_holds(s, n));
    rep.field("holds_below", s > 0 ? counting_bound_holds(s - 1, n) : false);
    return 0;
}

int cmd_bounds_search(int n, const std::string& fn_spec, int cap, const std::string& out_path,
                      Report& rep) {
    const BooleanFunction f = resolve_fn(fn_spec, n);
    const SearchResult r = exhaustive_gh(f, cap);
    rep.field("n", n);
    rep.field("function", fn_spec);
    rep.field("cap", cap);
    rep.field("found", r.found);
    if (r.found) {
        rep.field("size", r.size);
        rep.field("witness_computes", computes(r.witness, f).ok);
        if (!out_path.empty()) {
            save_game(r.witness, out_path);
            rep.field("wrote", out_path);
        }
    } else {
        rep.field("lower_bound", r.size);  // cap + 1
    }
    return 0;
}

// ---------------------------------------------------------------- attack ---

int cmd_attack(const std::string& game_path, bool frame_mode, int trials, uint64_t seed,
               Report& rep) {
    const GardenHoseGame g = load_game(game_path);
    std::mt19937_64 rng(seed);
    rep.field("game", game_path);
    rep.field("n", g.n);
    rep.field("size", g.s);
    rep.field("mode", frame_mode ? "frame" : "statevector");
    rep.field("trials", trials);
    rep.field("seed", seed);

    std::vector<json> cases;
    std::vector<std::string> case_lines;
    int bad = 0;
    for (uint32_t x = 0; x < (1u << g.n); ++x) {
        for (uint32_t y = 0; y < (1u << g.n); ++y) {
            const WaterPath p = flow(g, x, y);
            const size_t hops = (p.verts.size() - 1) / 2;
            json row;
            row["x"] = format_bits(x, g.n);
            row["y"] = format_bits(y, g.n);
            std::string extra;
            bool ok = true;
            if (frame_mode) {
                // symbolic only: draw random outcomes for each hop
                PauliString corr = pauli_identity(1);
                Side side = Side::alice;
                for (int t = 0; t < trials; ++t) {
                    std::vector<BellOutcome> zs(hops);
                    for (auto& z : zs) z.z = static_cast<int>(rng() & 3);
                    const FrameAttack fa = pauli_frame_attack(g, x, y, zs);
                    if (t == 0) corr = fa.correction;
                    side = fa.side;
                    ok = ok && fa.side == p.terminal();
                }
                row["side"] = side_name(side);
                row["hops"] = hops;
                row["correction"] = pauli_to_string(corr);
                extra = " hops=" + std::to_string(hops) + " correction=" + pauli_to_string(corr);
            } else {
                double worst = 1.0;
                Side side = Side::alice;
                for (int t = 0; t < trials; ++t) {
                    const StateVector psi = random_qubit(rng);
                    const AttackReport r = statevector_attack(g, x, y, psi, rng);
                    worst = std::min(worst, r.fidelity);
                    side = r.side;
                    const FrameAttack fa = pauli_frame_attack(g, x, y, r.path_outcomes);
                    ok = ok && r.side == p.terminal() && r.fidelity >= 1.0 - 1e-10 &&
                         fa.correction == r.correction;
                }
                row["side"] = side_name(side);
                row["min_fidelity"] = worst;
                extra = " fidelity=" + fmt_double(worst);
            }
            row["ok"] = ok;
            bad += !ok;
            cases.push_back(row);
            case_lines.push_back("input x=" + format_bits(x, g.n) + " y=" + format_bits(y, g.n) +
                                 ": side=" + row["side"].get<std::string>() + extra +
                                 (ok ? " ok" : " FAIL"));
        }
    }
    rep.rows("cases", cases, case_lines);
    const size_t total = cases.size();
    rep.field("result", bad == 0 ? "ok (" + std::to_string(total) + " inputs)"
                                 : "failed on " + std::to_string(bad) + " inputs");
    return bad == 0 ? 0 : 1;
}

// ------------------------------------------------------------------- mub ---

int cmd_mub_check(int n, Report& rep) {
    const MubFamily fam = build_mub(n);
    rep.field("n", n);
    rep.field("bases", fam.bases.size());
    const size_t class_size = (1u << n) - 1;
    bool shape_ok = fam.classes.size() == (1u << n) + 1;
    bool commuting = true;
    std::set<std::string> seen;
    for (const auto& cls : fam.classes) {
        shape_ok = shape_ok && cls.size() == class_size;
        for (const auto& p : cls) seen.insert(pauli_to_string(p));
        for (size_t i = 0; i < cls.size(); ++i) {
            for (size_t j = i + 1; j < cls.size(); ++j) {
                commuting = commuting && pauli_commutes(cls[i], cls[j]);
            }
        }
    }
    const bool partition = seen.size() == ((1u << (2 * n)) - 1);
    const uint32_t dim = 1u << n;
    double worst = 0.0;
    for (size_t a = 0; a < fam.bases.size(); ++a) {
        for (size_t b = a + 1; b < fam.bases.size(); ++b) {
            for (uint32_t i = 0; i < dim; ++i) {
                for (uint32_t j = 0; j < dim; ++j) {
                    cplx ov(0.0, 0.0);
                    for (uint32_t k = 0; k < dim; ++k) {
                        ov += std::conj(fam.bases[a][i].amp[k]) * fam.bases[b][j].amp[k];
                    }
                    worst = std::max(worst, std::abs(std::norm(ov) - 1.0 / dim));
                }
            }
        }
    }
    rep.field("class_size", class_size);
    rep.field("shape", shape_ok ? "ok" : "wrong");
    rep.field("commuting", commuting ? "ok" : "violated");
    rep.field("partition", partition ? "ok" : "incomplete");
    rep.field("unbiasedness_error", fmt_double(worst));
    const bool ok = shape_ok && commuting && partition && worst <= 1e-9;
    rep.field("result", ok ? "ok" : "failed");
    return ok ? 0 : 1;
}

int cmd_mub_attack(int n, int trials, uint64_t seed, Report& rep) {
    const MubFamily fam = build_mub(n);
    std::mt19937_64 rng(seed);
    int recovered = 0;
    for (int t = 0; t < trials; ++t) {
        const int a = static_cast<int>(rng() % ((1u << n) + 1));
        const uint32_t x = static_cast<uint32_t>(rng() % (1u << n));
        recovered += pv_mub_attack(fam, a, x, rng) == x;
    }
    rep.field("n", n);
    rep.field("trials", trials);
    rep.field("seed", seed);
    rep.field("recovered", recovered);
    rep.field("result", recovered == trials ? "ok" : "failed");
    return recovered == trials ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* t = std::getenv("GHC_THREADS")) {
        const int k = std::atoi(t);
        if (k > 0) omp_set_num_threads(k);
    }
#endif

    CLI::App app{"garden-hose games: construction, compilation, bounds and attacks"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON");

    // build
    auto* build = app.add_subcommand("build", "construct a named game");
    std::string b_kind, b_fn, b_out;
    int b_n = 1;
    bool b_optimized = false;
    build->add_option("kind", b_kind, "xor | eq | ip | maj | generic")->required();
    build->add_option("--n", b_n, "bits per player")->required();
    build->add_option("--fn", b_fn, "function for generic: name or truth-table file");
    build->add_flag("--optimized", b_optimized, "trimmed majority variant");
    build->add_option("-o,--out", b_out, "output game file")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "check a game against a function");
    std::string v_game, v_fn;
    verify->add_option("-g,--game", v_game, "game file")->required();
    verify->add_option("--fn", v_fn, "function: name or truth-table file")->required();

    // eval
    auto* eval = app.add_subcommand("eval", "run the water flow for one input pair");
    std::string e_game, e_x, e_y;
    bool e_logspace = false;
    eval->add_option("-g,--game", e_game, "game file")->required();
    eval->add_option("-x", e_x, "Alice's bits, MSB first")->required();
    eval->add_option("-y", e_y, "Bob's bits, MSB first")->required();
    eval->add_flag("--logspace", e_logspace, "cross-check with the log-space evaluator");

    // render
    auto* render = app.add_subcommand("render", "emit a DOT diagram of one instance");
    std::string r_game, r_x, r_y, r_out;
    render->add_option("-g,--game", r_game, "game file")->required();
    render->add_option("-x", r_x, "Alice's bits")->required();
    render->add_option("-y", r_y, "Bob's bits")->required();
    render->add_option("-o,--out", r_out, "output file (default: stdout)");

    // compile-circuit
    auto* cc = app.add_subcommand("compile-circuit", "netlist -> branching program -> game");
    std::string cc_in, cc_out;
    cc->add_option("-i,--in", cc_in, "netlist file")->required();
    cc->add_option("-o,--out", cc_out, "output game file")->required();

    // compile-tm
    auto* ct = app.add_subcommand("compile-tm", "reversible oblivious TM -> game");
    std::string ct_in, ct_out;
    int ct_n = 1;
    uint64_t ct_budget = kDefaultTMBudget;
    ct->add_option("-i,--in", ct_in, "machine file")->required();
    ct->add_option("--n", ct_n, "bits per player")->required();
    ct->add_option("--budget", ct_budget, "step budget per run");
    ct->add_option("-o,--out", ct_out, "output game file")->required();

    // bounds (with nested subcommands) + top-level search alias
    auto* bounds = app.add_subcommand("bounds", "lower bounds and exact search");
    int bo_n = 1, bo_cap = 6;
    std::string bo_fn, bo_out;
    bounds->add_option("--n", bo_n, "bits per player")->required();
    bounds->add_option("--fn", bo_fn, "function: name or truth-table file");
    bounds->require_subcommand(1);
    auto* bo_inj = bounds->add_subcommand("injective", "per-side injectivity of --fn");
    auto* bo_lb = bounds->add_subcommand("lb", "smallest s with s*log2(s) >= n");
    auto* bo_count = bounds->add_subcommand("counting", "smallest s the counting bound allows");
    auto* bo_search = bounds->add_subcommand("search", "exact complexity of --fn up to --cap");
    bo_search->add_option("--cap", bo_cap, "largest size to try");
    bo_search->add_option("-o,--out", bo_out, "save the witness game");

    auto* search = app.add_subcommand("search", "exact complexity (alias for bounds ... search)");
    int s_n = 1, s_cap = 6;
    std::string s_fn, s_out;
    search->add_option("--n", s_n, "bits per player")->required();
    search->add_option("--fn", s_fn, "function: name or truth-table file")->required();
    search->add_option("--cap", s_cap, "largest size to try");
    search->add_option("-o,--out", s_out, "save the witness game");

    // attack
    auto* attack = app.add_subcommand("attack", "teleportation attack over all inputs");
    std::string a_game;
    bool a_statevector = false, a_frame = false;
    int a_trials = 1;
    uint64_t a_seed = 0;
    attack->add_option("--game", a_game, "game file")->required();
    auto* a_sv_opt = attack->add_flag("--statevector", a_statevector, "dense simulation (default)");
    auto* a_fr_opt = attack->add_flag("--frame", a_frame, "symbolic Pauli-frame tracking only");
    a_sv_opt->excludes(a_fr_opt);
    attack->add_option("--trials", a_trials, "random qubits / outcome draws per input")->required();
    attack->add_option("--seed", a_seed, "RNG seed")->required();

    // mub
    auto* mub = app.add_subcommand("mub", "mutually unbiased bases");
    int m_n = 1, m_trials = 1;
    uint64_t m_seed = 0;
    mub->add_option("--n", m_n, "qubits")->required();
    mub->require_subcommand(1);
    auto* m_check = mub->add_subcommand("check", "verify the family invariants");
    auto* m_attack = mub->add_subcommand("attack", "teleport-and-permute identification");
    m_attack->add_option("--trials", m_trials, "random (a, x) draws")->required();
    m_attack->add_option("--seed", m_seed, "RNG seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit clean, parse errors are usage errors
    }

    const auto t0 = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (build->parsed()) {
            Report rep("build");
            code = cmd_build(b_kind, b_n, b_fn, b_optimized, b_out, rep);
            rep.print(as_json);
        } else if (verify->parsed()) {
            Report rep("verify");
            code = cmd_verify(v_game, v_fn, rep);
            rep.print(as_json);
        } else if (eval->parsed()) {
            Report rep("eval");
            code = cmd_eval(e_game, e_x, e_y, e_logspace, rep);
            rep.print(as_json);
        } else if (render->parsed()) {
            Report rep("render");
            code = cmd_render(r_game, r_x, r_y, r_out, as_json, rep);
            if (!rep.doc.empty()) rep.print(as_json);
        } else if (cc->parsed()) {
            Report rep("compile-circuit");
            code = cmd_compile_circuit(cc_in, cc_out, rep);
            rep.print(as_json);
        } else if (ct->parsed()) {
            Report rep("compile-tm");
            code = cmd_compile_tm(ct_in, ct_n, ct_budget, ct_out, rep);
            rep.print(as_json);
        } else if (bounds->parsed()) {
            if (bo_inj->parsed()) {
                if (bo_fn.empty()) throw std::runtime_error("bounds injective needs --fn");
                Report rep("bounds-injective");
                code = cmd_bounds_injective(bo_n, bo_fn, rep);
                rep.print(as_json);
            } else if (bo_lb->parsed()) {
                Report rep("bounds-lb");
                code = cmd_bounds_lb(bo_n, rep);
                rep.print(as_json);
            } else if (bo_count->parsed()) {
                Report rep("bounds-counting");
                code = cmd_bounds_counting(bo_n, rep);
                rep.print(as_json);
            } else {
                if (bo_fn.empty()) throw std::runtime_error("bounds search needs --fn");
                Report rep("bounds-search");
                code = cmd_bounds_search(bo_n, bo_fn, bo_cap, bo_out, rep);
                rep.print(as_json);
            }
        } else if (search->parsed()) {
            Report rep("bounds-search");
            code = cmd_bounds_search(s_n, s_fn, s_cap, s_out, rep);
            rep.print(as_json);
        } else if (attack->parsed()) {
            Report rep("attack");
            code = cmd_attack(a_game, a_frame && !a_statevector, a_trials, a_seed, rep);
            rep.print(as_json);
        } else if (mub->parsed()) {
            if (m_check->parsed()) {
                Report rep("mub-check");
                code = cmd_mub_check(m_n, rep);
                rep.print(as_json);
            } else {
                Report rep("mub-attack");
                code = cmd_mub_attack(m_n, m_trials, m_seed, rep);
                rep.print(as_json);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "ghc: " << e.what() << "\n";
        code = 2;
    }
    const auto t1 = std::chrono::steady_clock::now();
    std::cerr << "wall: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return code;
}
