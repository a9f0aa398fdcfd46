#ifndef BUNKBED_GRAPH_HPP
#define BUNKBED_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bunkbed {

/// Simple directed graph with string-labelled vertices. Vertex and edge
/// order is the declaration order and is canonical: every derived object
/// (bunkbed graph, subgraph masks, serializations) is aligned with it.
/// Immutable after construction.
class DiGraph {
public:
    DiGraph() = default;

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::string& label(int v) const { return labels_[v]; }

    /// Vertex index of a label, or -1.
    int find(const std::string& label) const {
        auto it = index_.find(label);
        return it == index_.end() ? -1 : it->second;
    }
    /// Vertex index of a label; throws UnknownVertexError.
    int at(const std::string& label) const;

    /// Index of directed edge (u,v), or -1.
    int find_edge(int u, int v) const;

    bool operator==(const DiGraph& o) const {
        return labels_ == o.labels_ && edge_set() == o.edge_set();
    }

    /// Edge set disregarding order (for isomorphic-as-labelled comparison).
    std::set<std::pair<int, int>> edge_set() const {
        return {edges_.begin(), edges_.end()};
    }

    friend DiGraph build_digraph(const std::vector<std::string>&,
                                 const std::vector<std::pair<std::string, std::string>>&);

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::unordered_map<std::string, int> index_;
};

/// Validating constructor. Rejects self loops, repeated directed edges and
/// edges with undeclared endpoints.
DiGraph build_digraph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges);

bool is_acyclic(const DiGraph& g);

/// A topological order of the vertices; throws BaseNotAcyclicError.
std::vector<int> topological_order(const DiGraph& g);

/// The 9-vertex base graph of the counterexample construction.
DiGraph build_g1();

/// Reverse every edge and rename vertices: u->v becomes relabel(v)->relabel(u).
/// The map must be a bijection on the vertex labels.
DiGraph reverse_and_relabel(const DiGraph& g,
                            const std::map<std::string, std::string>& relabel);

/// Substitute each vertex i in T by i_a, i_1..i_k, i_b with edges
/// i_a->i_j->i_b; in-edges of i are rerouted to i_a, out-edges leave from
/// i_b. Members of T must be pairwise non-adjacent.
DiGraph blowup(const DiGraph& g, const std::set<std::string>& T, int k);

/// Undirected edge-reachability: base edge indices reachable from `from` by
/// undirected paths avoiding `blocked` vertices; an edge incident to a
/// blocked vertex counts once its other endpoint is reached. Empty if
/// `from` itself is blocked.
std::set<int> reachable_edge_set(const DiGraph& g, const std::string& from,
                                 const std::set<std::string>& blocked);

} // namespace bunkbed

#endif
