#include "gh/circuit.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gh/bits.hpp"

namespace gh {

int Circuit::depth() const {
    std::vector<int> d(gates.size(), -1);
    for (size_t i = 0; i < gates.size(); i++) {
        const Gate& g = gates[i];
        switch (g.kind) {
            case GateKind::input: d[i] = 0; break;
            case GateKind::not_gate: d[i] = d[g.a]; break;
            default: d[i] = 1 + std::max(d[g.a], d[g.b]); break;
        }
    }
    return output < 0 ? 0 : d[output];
}

bool eval_circuit(const Circuit& c, uint32_t x, uint32_t y) {
    std::vector<char> v(c.gates.size());
    for (size_t i = 0; i < c.gates.size(); i++) {
        const Gate& g = c.gates[i];
        switch (g.kind) {
            case GateKind::input:
                v[i] = g.input_index <= c.n ? bit_at(x, c.n, g.input_index)
                                            : bit_at(y, c.n, g.input_index - c.n);
                break;
            case GateKind::not_gate: v[i] = !v[g.a]; break;
            case GateKind::and_gate: v[i] = v[g.a] && v[g.b]; break;
            case GateKind::or_gate: v[i] = v[g.a] || v[g.b]; break;
        }
    }
    return v[c.output];
}

namespace {

struct Builder {
    Circuit c;
    std::map<std::string, int> wire;  // name -> gate id
    int max_x = 0, max_y = 0;

    // y-inputs are stored with a negative index until n is known
    int input_id(const std::string& name, int line) {
        auto it = wire.find(name);
        if (it != wire.end()) return it->second;
        char kind = name[0];
        int idx;
        try {
            size_t pos = 0;
            idx = std::stoi(name.substr(1), &pos);
            if (pos + 1 != name.size() || idx < 1) throw std::invalid_argument("");
        } catch (...) {
            throw CircuitParseError(line, "bad input wire: " + name);
        }
        int& maxref = kind == 'x' ? max_x : max_y;
        maxref = std::max(maxref, idx);
        c.gates.push_back({GateKind::input, -1, -1, kind == 'x' ? idx : -idx});
        wire[name] = (int)c.gates.size() - 1;
        return wire[name];
    }

    int operand(const std::string& name, int line) {
        if (name.empty()) throw CircuitParseError(line, "missing operand");
        if (name[0] == 'x' || name[0] == 'y') return input_id(name, line);
        auto it = wire.find(name);
        if (it == wire.end()) throw CircuitParseError(line, "wire used before definition: " + name);
        return it->second;
    }
};

}  // namespace

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    Builder b;
    std::string raw;
    int lineno = 0;
    bool have_out = false;

    while (std::getline(in, raw)) {
        lineno++;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string name, eq, op, a1, a2, extra;
        if (!(ls >> name)) continue;  // blank
        if (have_out) throw CircuitParseError(lineno, "content after the out line");
        if (!(ls >> eq) || eq != "=") throw CircuitParseError(lineno, "expected '='");

        if (name == "out") {
            if (!(ls >> a1)) throw CircuitParseError(lineno, "out needs a wire");
            if (ls >> extra) throw CircuitParseError(lineno, "trailing tokens: " + extra);
            b.c.output = b.operand(a1, lineno);
            have_out = true;
            continue;
        }
        if (name[0] != 'w') throw CircuitParseError(lineno, "defined wires must be named w<k>: " + name);
        if (b.wire.count(name)) throw CircuitParseError(lineno, "wire defined twice: " + name);
        if (!(ls >> op)) throw CircuitParseError(lineno, "missing gate kind");

        if (op == "NOT") {
            if (!(ls >> a1)) throw CircuitParseError(lineno, "NOT needs one operand");
            if (ls >> extra) throw CircuitParseError(lineno, "trailing tokens: " + extra);
            int ia = b.operand(a1, lineno);
            b.c.gates.push_back({GateKind::not_gate, ia, -1, 0});
        } else if (op == "AND" || op == "OR") {
            if (!(ls >> a1 >> a2)) throw CircuitParseError(lineno, op + " needs two operands");
            if (ls >> extra) throw CircuitParseError(lineno, "trailing tokens: " + extra);
            int ia = b.operand(a1, lineno);
            int ib = b.operand(a2, lineno);
            b.c.gates.push_back({op == "AND" ? GateKind::and_gate : GateKind::or_gate, ia, ib, 0});
        } else {
            throw CircuitParseError(lineno, "unknown gate kind: " + op);
        }
        b.wire[name] = (int)b.c.gates.size() - 1;
    }
    if (!have_out) throw CircuitParseError(lineno, "missing out line");

    // fix up input indices now that n is known
    b.c.n = std::max(b.max_x, b.max_y);
    for (auto& g : b.c.gates)
        if (g.kind == GateKind::input && g.input_index < 0) g.input_index = b.c.n - g.input_index;
    return b.c;
}

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    std::vector<std::string> name(c.gates.size());
    int next = 1;
    for (size_t i = 0; i < c.gates.size(); i++) {
        const Gate& g = c.gates[i];
        if (g.kind == GateKind::input) {
            name[i] = g.input_index <= c.n ? "x" + std::to_string(g.input_index)
                                           : "y" + std::to_string(g.input_index - c.n);
            continue;
        }
        name[i] = "w" + std::to_string(next++);
        if (g.kind == GateKind::not_gate)
            out << name[i] << " = NOT " << name[g.a] << "\n";
        else
            out << name[i] << " = " << (g.kind == GateKind::and_gate ? "AND" : "OR") << " "
                << name[g.a] << " " << name[g.b] << "\n";
    }
    out << "out = " << name[c.output] << "\n";
    return out.str();
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open circuit file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_circuit(ss.str());
}

}  // namespace gh
