#ifndef BUNKBED_BUNKBED_GRAPH_HPP
#define BUNKBED_BUNKBED_GRAPH_HPP

#include "bunkbed/graph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bunkbed {

/// Layer of the two-storey graph: - (lower) or + (upper).
enum class Layer : int { Lower = 0, Upper = 1 };

inline Layer flip(Layer l) { return l == Layer::Lower ? Layer::Upper : Layer::Lower; }

/// A vertex of the bunkbed graph: a base vertex together with a layer.
struct BunkbedVertex {
    int base = 0;
    Layer layer = Layer::Lower;
    bool operator==(const BunkbedVertex&) const = default;
};

enum class EdgeKind { Horizontal, Vertical };

/// One edge of the bunkbed graph in the canonical table. Horizontal edges
/// carry the base edge index and a layer; vertical edges carry the base
/// vertex index and are bidirected.
struct BunkbedEdge {
    EdgeKind kind;
    int index;   // base edge index (horizontal) or base vertex index (vertical)
    Layer layer; // meaningful for horizontal edges only
};

/// Percolation configuration: one bit per bunkbed edge, aligned with the
/// canonical edge ordering (all lower horizontals in base edge order, then
/// all upper horizontals, then verticals in base vertex order).
class SubgraphMask {
public:
    SubgraphMask() = default;
    explicit SubgraphMask(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v = true) {
        if (v)
            words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    int count() const;

    /// First word; valid whenever size() <= 64.
    std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }
    std::uint64_t& word0() { return words_[0]; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const SubgraphMask&) const = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// The bunkbed graph of a base digraph: two copies of the base joined by a
/// bidirected vertical edge per base vertex. Immutable.
class BunkbedGraph {
public:
    explicit BunkbedGraph(DiGraph base);

    const DiGraph& base() const { return base_; }
    int base_vertices() const { return base_.vertex_count(); }
    int base_edges() const { return base_.edge_count(); }

    int vertex_count() const { return 2 * base_vertices(); }
    int edge_count() const { return 2 * base_edges() + base_vertices(); }

    // Canonical edge indices.
    int lower(int base_edge) const { return base_edge; }
    int upper(int base_edge) const { return base_edges() + base_edge; }
    int horizontal(int base_edge, Layer l) const {
        return l == Layer::Lower ? lower(base_edge) : upper(base_edge);
    }
    int vertical(int base_vertex) const { return 2 * base_edges() + base_vertex; }

    BunkbedEdge edge(int i) const;

    /// Bunkbed vertex ids, 0..2V-1: base + V * layer.
    int vid(BunkbedVertex v) const {
        return v.base + base_vertices() * static_cast<int>(v.layer);
    }
    BunkbedVertex vertex_of(int vid) const {
        int n = base_vertices();
        return {vid % n, vid < n ? Layer::Lower : Layer::Upper};
    }

    /// Parse "3-" / "3+" into a bunkbed vertex; throws UnknownVertexError.
    BunkbedVertex parse_vertex(const std::string& s) const;
    std::string vertex_name(BunkbedVertex v) const {
        return base_.label(v.base) + (v.layer == Layer::Lower ? "-" : "+");
    }

    SubgraphMask empty_mask() const { return SubgraphMask(edge_count()); }
    SubgraphMask full_mask() const;

private:
    DiGraph base_;
};

/// Shadow (base edge) and mirrored edge of a bunkbed edge; both empty for
/// vertical edges.
std::pair<std::optional<int>, std::optional<int>>
shadow_and_mirror(const BunkbedGraph& bb, int edge_index);

/// Mirror the configuration across the selected shadow edges: verticals are
/// kept, horizontals whose shadow lies in F swap layers. An involution.
SubgraphMask mirror_subgraph(const BunkbedGraph& bb, const SubgraphMask& H,
                             const std::set<int>& F);

/// Base vertices whose vertical edge is present in H.
std::set<int> posts(const BunkbedGraph& bb, const SubgraphMask& H);

} // namespace bunkbed

#endif
