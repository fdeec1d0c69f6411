#include "vernon/dot.hpp"

#include <sstream>

namespace vernon {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string label(const Corolla& c) {
    if (c.is_special()) return "";
    const auto& d = c.instance().decoration();
    return d.is_base() ? d.name() : "tree(" + std::to_string(d.tree_class().representative().corollas().size()) + ")";
}

}  // namespace

std::string to_dot(const VernonGraph& g, const std::string& graph_name) {
    std::ostringstream out;
    out << "graph " << quoted(graph_name) << " {\n";
    out << "  node [fontname=\"Helvetica\"];\n";
    for (std::size_t i = 0; i < g.corollas().size(); ++i) {
        const auto& c = g.corollas()[i];
        out << "  c" << i << " [label=" << quoted(label(c)) << ", shape=" << (c.is_special() ? "diamond" : "circle")
            << ", tooltip=" << quoted(to_string(c)) << "];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  c" << g.owner(e.first) << " -- c" << g.owner(e.second) << " [label=" << quoted(e.first.name() + "~" + e.second.name())
            << "];\n";
    }
    std::size_t k = 0;
    for (const auto& v : g.free_variables()) {
        out << "  fv" << k << " [label=" << quoted(v.name()) << ", shape=plaintext];\n";
        out << "  c" << g.owner(v) << " -- fv" << k << " [style=dashed];\n";
        ++k;
    }
    out << "}\n";
    return out.str();
}

}  // namespace vernon
