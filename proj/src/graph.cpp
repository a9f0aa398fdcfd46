#include "bunkbed/graph.hpp"

#include "bunkbed/errors.hpp"

#include <algorithm>
#include <queue>

namespace bunkbed {

int DiGraph::at(const std::string& label) const {
    int v = find(label);
    if (v < 0) throw UnknownVertexError(label);
    return v;
}

int DiGraph::find_edge(int u, int v) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i].first == u && edges_[i].second == v) return i;
    return -1;
}

DiGraph build_digraph(const std::vector<std::string>& vertices,
                      const std::vector<std::pair<std::string, std::string>>& edges) {
    DiGraph g;
    for (const auto& label : vertices) {
        if (label.empty()) throw UnknownVertexError("(empty label)");
        if (g.index_.count(label)) throw UnknownVertexError("duplicate vertex label " + label);
        g.index_.emplace(label, static_cast<int>(g.labels_.size()));
        g.labels_.push_back(label);
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& [tail, head] : edges) {
        auto ti = g.index_.find(tail);
        auto hi = g.index_.find(head);
        if (ti == g.index_.end()) throw UnknownEndpointError(tail);
        if (hi == g.index_.end()) throw UnknownEndpointError(head);
        if (ti->second == hi->second) throw SelfLoopError(tail);
        if (!seen.emplace(ti->second, hi->second).second)
            throw DuplicateEdgeError(tail + "->" + head);
        g.edges_.emplace_back(ti->second, hi->second);
    }
    return g;
}

std::vector<int> topological_order(const DiGraph& g) {
    int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (const auto& [u, v] : g.edges()) {
        ++indeg[v];
        out[u].push_back(v);
    }
    std::vector<int> order;
    order.reserve(n);
    // Smallest-index-first for a deterministic order.
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) throw BaseNotAcyclicError("directed cycle found");
    return order;
}

bool is_acyclic(const DiGraph& g) {
    try {
        topological_order(g);
        return true;
    } catch (const BaseNotAcyclicError&) {
        return false;
    }
}

DiGraph build_g1() {
    std::vector<std::string> vs = {"1", "2", "3", "4", "5", "6", "7", "8", "9"};
    std::vector<std::pair<std::string, std::string>> es = {
        {"1", "2"}, {"1", "4"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"3", "7"},
        {"5", "6"}, {"6", "7"}, {"6", "9"}, {"7", "8"}, {"8", "9"}};
    return build_digraph(vs, es);
}

DiGraph reverse_and_relabel(const DiGraph& g,
                            const std::map<std::string, std::string>& relabel) {
    std::set<std::string> images;
    for (const auto& label : g.labels()) {
        auto it = relabel.find(label);
        if (it == relabel.end()) throw NotABijectionError("no image for " + label);
        if (g.find(it->second) < 0) throw NotABijectionError("image " + it->second + " not a vertex");
        if (!images.insert(it->second).second) throw NotABijectionError("image " + it->second + " repeated");
    }
    std::vector<std::pair<std::string, std::string>> es;
    es.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges())
        es.emplace_back(relabel.at(g.label(v)), relabel.at(g.label(u)));
    return build_digraph(g.labels(), es);
}

DiGraph blowup(const DiGraph& g, const std::set<std::string>& T, int k) {
    std::set<int> t_ids;
    for (const auto& label : T) t_ids.insert(g.at(label));
    for (const auto& [u, v] : g.edges())
        if (t_ids.count(u) && t_ids.count(v))
            throw AdjacentBlowupVerticesError(g.label(u) + "," + g.label(v));

    std::vector<std::string> vs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!t_ids.count(v)) {
            vs.push_back(g.label(v));
            continue;
        }
        const std::string& b = g.label(v);
        vs.push_back(b + "a");
        for (int j = 1; j <= k; ++j) vs.push_back(b + "_" + std::to_string(j));
        vs.push_back(b + "b");
    }
    std::vector<std::pair<std::string, std::string>> es;
    for (const auto& [u, v] : g.edges()) {
        std::string tail = t_ids.count(u) ? g.label(u) + "b" : g.label(u);
        std::string head = t_ids.count(v) ? g.label(v) + "a" : g.label(v);
        es.emplace_back(tail, head);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!t_ids.count(v)) continue;
        const std::string& b = g.label(v);
        for (int j = 1; j <= k; ++j) es.emplace_back(b + "a", b + "_" + std::to_string(j));
        for (int j = 1; j <= k; ++j) es.emplace_back(b + "_" + std::to_string(j), b + "b");
    }
    return build_digraph(vs, es);
}

std::set<int> reachable_edge_set(const DiGraph& g, const std::string& from,
                                 const std::set<std::string>& blocked) {
    int start = g.at(from);
    std::set<int> blocked_ids;
    for (const auto& label : blocked) blocked_ids.insert(g.at(label));
    std::set<int> result;
    if (blocked_ids.count(start)) return result;

    std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count()); // (other endpoint, edge idx)
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        inc[u].emplace_back(v, i);
        inc[v].emplace_back(u, i);
    }
    std::vector<bool> visited(g.vertex_count(), false);
    std::queue<int> q;
    visited[start] = true;
    q.push(start);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [w, e] : inc[v]) {
            result.insert(e);
            if (!visited[w] && !blocked_ids.count(w)) {
                visited[w] = true;
                q.push(w);
            }
        }
    }
    return result;
}

} // namespace bunkbed
