#ifndef BUNKBED_EVENT_HPP
#define BUNKBED_EVENT_HPP

#include "bunkbed/bunkbed_graph.hpp"

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace bunkbed {

/// Predicate over percolation configurations. Immutable value type; nodes
/// are shared. Atoms refer to a specific bunkbed graph by index, so an
/// event must only be evaluated on the graph it was built for.
class Event {
public:
    enum class Op {
        True,
        Reach,        // directed path x -> y, verticals both ways, reflexive
        ReachWithin,  // Reach inside the subgraph induced by a vertex set
        EdgePresent,
        PostsInclude,
        PostsExactly,
        And,
        Or,
        Not
    };

    struct Node {
        Op op = Op::True;
        int x = 0, y = 0;             // bunkbed vertex ids (Reach, ReachWithin)
        std::uint64_t within = 0;     // vertex-id bit set (ReachWithin)
        std::vector<int> within_ids;  // same, as ids, for printing / big graphs
        int edge = 0;                 // bunkbed edge index (EdgePresent)
        std::set<int> vset;           // base vertex ids (Posts*)
        std::vector<Event> kids;
    };

    Event() : node_(truth_node()) {}
    const Node& node() const { return *node_; }

    friend Event ev_true();
    friend Event ev_reach(const BunkbedGraph&, BunkbedVertex, BunkbedVertex);
    friend Event ev_reach_within(const BunkbedGraph&, const std::vector<BunkbedVertex>&,
                                 BunkbedVertex, BunkbedVertex);
    friend Event ev_edge(const BunkbedGraph&, int);
    friend Event ev_posts_include(const BunkbedGraph&, const std::set<int>&);
    friend Event ev_posts_exactly(const BunkbedGraph&, const std::set<int>&);
    friend Event ev_and(Event, Event);
    friend Event ev_or(Event, Event);
    friend Event ev_not(Event);

private:
    explicit Event(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static std::shared_ptr<const Node> truth_node();
    std::shared_ptr<const Node> node_;
};

Event ev_true();
Event ev_reach(const BunkbedGraph& bb, BunkbedVertex x, BunkbedVertex y);
Event ev_reach_within(const BunkbedGraph& bb, const std::vector<BunkbedVertex>& within,
                      BunkbedVertex x, BunkbedVertex y);
Event ev_edge(const BunkbedGraph& bb, int edge_index);
Event ev_posts_include(const BunkbedGraph& bb, const std::set<int>& base_vertices);
Event ev_posts_exactly(const BunkbedGraph& bb, const std::set<int>& base_vertices);
Event ev_and(Event a, Event b);
Event ev_or(Event a, Event b);
Event ev_not(Event a);

/// Reachability and event evaluation against one configuration at a time.
/// Load a configuration, then query; reach sets are memoized per load.
/// Pure with respect to graph and mask; one context per thread.
class EvalContext {
public:
    explicit EvalContext(const BunkbedGraph& bb);

    /// Bind a configuration. Mask length must match the graph.
    void load(const SubgraphMask& H);
    /// Bind a configuration given as a single word (edge_count() <= 64).
    void load_word(std::uint64_t mask);

    bool eval(const Event& ev);
    bool reach(int x_vid, int y_vid);
    bool reach_within(std::uint64_t within, int x_vid, int y_vid);

    const BunkbedGraph& graph() const { return bb_; }

private:
    std::uint64_t reach_set_small(int x_vid, std::uint64_t vertex_mask);
    bool reach_general(const std::vector<int>* within, int x_vid, int y_vid);

    const BunkbedGraph& bb_;
    bool small_;                                   // 2V <= 64 fast path
    std::vector<std::uint64_t> rows_;              // adjacency bit rows (small)
    std::unordered_map<int, std::uint64_t> memo_;  // reach sets from source (small)
    // general path
    std::vector<std::vector<int>> adj_;
    bool have_mask_ = false;
    SubgraphMask mask_;
    // edge endpoint table: from-vid, to-vid, bidirected
    struct Ep { int from, to; bool bidir; };
    std::vector<Ep> eps_;
};

bool reaches(const BunkbedGraph& bb, const SubgraphMask& H, BunkbedVertex x, BunkbedVertex y);
bool eval_event(const BunkbedGraph& bb, const Event& ev, const SubgraphMask& H);

/// Edges that can influence the event: everything else may be marginalized
/// out of an enumeration.
SubgraphMask event_support(const BunkbedGraph& bb, const Event& ev);

/// Textual expression form, e.g.
///   and(reach(1-,9-), not(or(reach(1-,5-), reach(1-,5+))))
///   postsExactly(2,5,8)
///   reachWithin([3-,3+,9-,9+], 3-, 9-)
///   edge(1-,4-)            edge(2-,2+) is the vertical at 2
Event parse_event(const BunkbedGraph& bb, const std::string& text);
std::string event_to_string(const BunkbedGraph& bb, const Event& ev);

} // namespace bunkbed

#endif
