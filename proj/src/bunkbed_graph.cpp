#include "bunkbed/bunkbed_graph.hpp"

#include "bunkbed/errors.hpp"

#include <bit>

namespace bunkbed {

int SubgraphMask::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

BunkbedGraph::BunkbedGraph(DiGraph base) : base_(std::move(base)) {}

BunkbedEdge BunkbedGraph::edge(int i) const {
    int e = base_edges();
    if (i < e) return {EdgeKind::Horizontal, i, Layer::Lower};
    if (i < 2 * e) return {EdgeKind::Horizontal, i - e, Layer::Upper};
    return {EdgeKind::Vertical, i - 2 * e, Layer::Lower};
}

BunkbedVertex BunkbedGraph::parse_vertex(const std::string& s) const {
    if (s.size() < 2) throw UnknownVertexError(s);
    char sign = s.back();
    if (sign != '-' && sign != '+') throw UnknownVertexError(s);
    int base = base_.at(s.substr(0, s.size() - 1));
    return {base, sign == '-' ? Layer::Lower : Layer::Upper};
}

SubgraphMask BunkbedGraph::full_mask() const {
    SubgraphMask m(edge_count());
    for (int i = 0; i < edge_count(); ++i) m.set(i);
    return m;
}

std::pair<std::optional<int>, std::optional<int>>
shadow_and_mirror(const BunkbedGraph& bb, int edge_index) {
    BunkbedEdge e = bb.edge(edge_index);
    if (e.kind == EdgeKind::Vertical) return {std::nullopt, std::nullopt};
    return {e.index, bb.horizontal(e.index, flip(e.layer))};
}

SubgraphMask mirror_subgraph(const BunkbedGraph& bb, const SubgraphMask& H,
                             const std::set<int>& F) {
    SubgraphMask out = H;
    for (int f : F) {
        if (f < 0 || f >= bb.base_edges()) throw UnknownVertexError("shadow edge index " + std::to_string(f));
        bool lo = H.test(bb.lower(f));
        bool hi = H.test(bb.upper(f));
        out.set(bb.lower(f), hi);
        out.set(bb.upper(f), lo);
    }
    return out;
}

std::set<int> posts(const BunkbedGraph& bb, const SubgraphMask& H) {
    std::set<int> p;
    for (int v = 0; v < bb.base_vertices(); ++v)
        if (H.test(bb.vertical(v))) p.insert(v);
    return p;
}

} // namespace bunkbed
