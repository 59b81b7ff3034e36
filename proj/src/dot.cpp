#include "gh/dot.hpp"

#include <set>
#include <sstream>

#include "gh/bits.hpp"

namespace gh {

namespace {

std::string node(const PathVertex& pv) {
    if (pv.v == 0) return "tap";
    return (pv.side == Side::alice ? "a" : "b") + std::to_string(pv.v);
}

}  // namespace

std::string render_diagram(const GardenHoseGame& g, uint32_t x, uint32_t y) {
    const Matching ma = g.alice(x);
    const Matching mb = g.bob(y);
    const WaterPath path = flow(g, x, y);

    // edges traversed by the water, as normalized node-name pairs
    std::set<std::pair<std::string, std::string>> wet;
    for (size_t i = 0; i + 1 < path.verts.size(); i++) {
        std::string u = node(path.verts[i]), v = node(path.verts[i + 1]);
        if (v < u) std::swap(u, v);
        wet.insert({u, v});
    }
    auto is_wet = [&](std::string u, std::string v) {
        if (v < u) std::swap(u, v);
        return wet.count({u, v}) != 0;
    };

    std::ostringstream out;
    out << "graph gardenhose {\n";
    out << "  rankdir=LR;\n";
    out << "  label=\"x=" << format_bits(x, g.n) << " y=" << format_bits(y, g.n) << " exit="
        << (path.terminal() == Side::alice ? "alice" : "bob") << "\";\n";
    out << "  tap [shape=square];\n";
    for (int i = 1; i <= g.s; i++) out << "  a" << i << " [label=\"" << i << "\"];\n";
    for (int i = 1; i <= g.s; i++) out << "  b" << i << " [label=\"" << i << "\"];\n";
    for (int i = 1; i <= g.s; i++) {
        std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        out << "  " << a << " -- " << b << " [style=dashed "
            << (is_wet(a, b) ? "color=blue penwidth=2" : "color=gray") << "];\n";
    }
    auto hose = [&](const std::string& un, const std::string& vn) {
        out << "  " << un << " -- " << vn << " ["
            << (is_wet(un, vn) ? "color=blue penwidth=2" : "color=black") << "];\n";
    };
    for (auto& [u, v] : ma.edges) hose(u == 0 ? "tap" : "a" + std::to_string(u), "a" + std::to_string(v));
    for (auto& [u, v] : mb.edges) hose("b" + std::to_string(u), "b" + std::to_string(v));
    out << "}\n";
    return out.str();
}

}  // namespace gh
