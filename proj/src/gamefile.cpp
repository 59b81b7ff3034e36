#include "gh/gamefile.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "gh/bits.hpp"

namespace gh {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& s, int line, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw GameParseError(line, "bad " + what + ": \"" + s + "\"");
    }
}

// "0-1, 2-3" -> matching; validates range and degree
Matching parse_edges(const std::string& body, int lo, int hi, int line) {
    Matching m;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw GameParseError(line, "empty edge entry");
        size_t dash = item.find('-');
        if (dash == std::string::npos) throw GameParseError(line, "edge must look like u-v: \"" + item + "\"");
        int u = parse_int(trim(item.substr(0, dash)), line, "edge endpoint");
        int v = parse_int(trim(item.substr(dash + 1)), line, "edge endpoint");
        m.add(u, v);
    }
    std::string problem = check_matching(m, lo, hi);
    if (!problem.empty()) throw GameParseError(line, problem);
    return m;
}

}  // namespace

GardenHoseGame parse_game(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int n = -1, s = -1;
    auto alice = std::make_shared<std::vector<Matching>>();
    auto bob = std::make_shared<std::vector<Matching>>();
    std::vector<bool> have_a, have_b;

    while (std::getline(in, raw)) {
        lineno++;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.rfind("ghgame", 0) == 0) {
            if (n >= 0) throw GameParseError(lineno, "duplicate ghgame header");
            std::stringstream ss(line);
            std::string tok;
            ss >> tok;  // "ghgame"
            while (ss >> tok) {
                if (tok.rfind("n=", 0) == 0)
                    n = parse_int(tok.substr(2), lineno, "n");
                else if (tok.rfind("s=", 0) == 0)
                    s = parse_int(tok.substr(2), lineno, "s");
                else
                    throw GameParseError(lineno, "unknown header field: " + tok);
            }
            if (n < 0 || s < 0) throw GameParseError(lineno, "header needs n= and s=");
            if (n > 16) throw GameParseError(lineno, "n too large for table form");
            alice->assign(1u << n, Matching{});
            bob->assign(1u << n, Matching{});
            have_a.assign(1u << n, false);
            have_b.assign(1u << n, false);
            continue;
        }

        if (n < 0) throw GameParseError(lineno, "expected ghgame header first");

        bool is_alice = line.rfind("alice ", 0) == 0;
        bool is_bob = line.rfind("bob ", 0) == 0;
        if (!is_alice && !is_bob) throw GameParseError(lineno, "expected alice/bob block: \"" + line + "\"");

        std::string rest = trim(line.substr(is_alice ? 6 : 4));
        const char* key = is_alice ? "x=" : "y=";
        if (rest.rfind(key, 0) != 0) throw GameParseError(lineno, std::string("expected ") + key + "<bits>:");
        size_t colon = rest.find(':');
        if (colon == std::string::npos) throw GameParseError(lineno, "missing ':' after input bits");
        std::string bits = trim(rest.substr(2, colon - 2));
        uint32_t input;
        try {
            input = parse_bits(bits, n);
        } catch (const std::exception& e) {
            throw GameParseError(lineno, e.what());
        }

        std::string body = trim(rest.substr(colon + 1));
        Matching m = body.empty() ? Matching{} : parse_edges(body, is_alice ? 0 : 1, s, lineno);
        auto& have = is_alice ? have_a : have_b;
        if (have[input])
            throw GameParseError(lineno, std::string(is_alice ? "alice x=" : "bob y=") + bits + " given twice");
        have[input] = true;
        (is_alice ? *alice : *bob)[input] = std::move(m);
    }

    if (n < 0) throw GameParseError(lineno, "missing ghgame header");
    for (uint32_t v = 0; v < (1u << n); v++) {
        if (!have_a[v]) throw GameParseError(lineno, "missing block alice x=" + format_bits(v, n));
        if (!have_b[v]) throw GameParseError(lineno, "missing block bob y=" + format_bits(v, n));
    }

    GardenHoseGame g;
    g.n = n;
    g.s = s;
    g.alice = [alice](uint32_t x) { return (*alice)[x]; };
    g.bob = [bob](uint32_t y) { return (*bob)[y]; };
    return g;
}

std::string serialize_game(const GardenHoseGame& g) {
    std::ostringstream out;
    out << "ghgame n=" << g.n << " s=" << g.s << "\n";
    const uint32_t count = 1u << g.n;
    auto block = [&](const char* who, const char* key, uint32_t v, const Matching& m) {
        out << who << " " << key << format_bits(v, g.n) << ":";
        for (size_t i = 0; i < m.edges.size(); i++) {
            out << (i ? ", " : " ") << m.edges[i].first << "-" << m.edges[i].second;
        }
        out << "\n";
    };
    for (uint32_t x = 0; x < count; x++) block("alice", "x=", x, g.alice(x));
    for (uint32_t y = 0; y < count; y++) block("bob", "y=", y, g.bob(y));
    return out.str();
}

GardenHoseGame load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open game file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_game(ss.str());
}

void save_game(const GardenHoseGame& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write game file: " + path);
    out << serialize_game(g);
}

}  // namespace gh
