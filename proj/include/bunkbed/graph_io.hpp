#ifndef BUNKBED_GRAPH_IO_HPP
#define BUNKBED_GRAPH_IO_HPP

#include "bunkbed/graph.hpp"

#include <iosfwd>
#include <string>

namespace bunkbed {

/// Graph text format: '#' starts a comment line, "v <label>" declares a
/// vertex, "e <tail> <head>" declares a directed edge. Declaration order is
/// the canonical order.
DiGraph read_graph(std::istream& in);
DiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const DiGraph& g);

} // namespace bunkbed

#endif
