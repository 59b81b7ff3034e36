#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gh {

// Fan-in-two Boolean circuits over the 2n input wires x1..xn, y1..yn.
// Depth counts AND/OR gates on the longest path; NOT gates and inputs are
// free (they compile away at zero program length).

enum class GateKind { input, not_gate, and_gate, or_gate };

struct Gate {
    GateKind kind = GateKind::input;
    int a = -1, b = -1;   // operand gate ids
    int input_index = 0;  // 1..2n for kind == input
};

struct Circuit {
    int n = 0;  // bits per player
    std::vector<Gate> gates;
    int output = -1;  // gate id

    int depth() const;
};

bool eval_circuit(const Circuit& c, uint32_t x, uint32_t y);

// Netlist format, one gate per line, wires defined before use:
//
//   w1 = AND x1 y1
//   w2 = NOT w1
//   w3 = OR w2 x2
//   out = w3
//
// Inputs are x<i>/y<i> (1-based); n is the largest index that appears.
struct CircuitParseError : std::runtime_error {
    int line;
    CircuitParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

Circuit parse_circuit(const std::string& text);
std::string serialize_circuit(const Circuit& c);
Circuit load_circuit(const std::string& path);

}  // namespace gh
