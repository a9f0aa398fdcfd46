#include "bunkbed/graph_io.hpp"

#include "bunkbed/errors.hpp"

#include <fstream>
#include <sstream>

namespace bunkbed {

DiGraph read_graph(std::istream& in) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "v") {
            std::string label;
            if (!(ls >> label)) throw ParseError("line " + std::to_string(lineno) + ": v needs a label");
            vertices.push_back(label);
        } else if (tag == "e") {
            std::string tail, head;
            if (!(ls >> tail >> head))
                throw ParseError("line " + std::to_string(lineno) + ": e needs tail and head");
            edges.emplace_back(tail, head);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
        }
    }
    return build_digraph(vertices, edges);
}

DiGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const DiGraph& g) {
    for (const auto& label : g.labels()) out << "v " << label << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << g.label(u) << " " << g.label(v) << "\n";
}

} // namespace bunkbed
