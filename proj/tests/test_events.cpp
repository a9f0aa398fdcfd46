#include <doctest.h>

#include "bunkbed/errors.hpp"
#include "bunkbed/event.hpp"
#include "bunkbed/graph.hpp"

using namespace bunkbed;

namespace {

const BunkbedGraph& bb() {
    static BunkbedGraph g(build_g1());
    return g;
}

SubgraphMask mask_of(std::initializer_list<int> edges) {
    SubgraphMask m = bb().empty_mask();
    for (int e : edges) m.set(e);
    return m;
}

int lower_edge(const char* a, const char* b) {
    return bb().lower(bb().base().find_edge(bb().base().at(a), bb().base().at(b)));
}
int upper_edge(const char* a, const char* b) {
    return bb().upper(bb().base().find_edge(bb().base().at(a), bb().base().at(b)));
}

} // namespace

TEST_CASE("reachability is reflexive and verticals are bidirected") {
    Event self = parse_event(bb(), "reach(4-,4-)");
    CHECK(eval_event(bb(), self, bb().empty_mask()));

    SubgraphMask h = mask_of({bb().vertical(bb().base().at("4"))});
    CHECK(eval_event(bb(), parse_event(bb(), "reach(4-,4+)"), h));
    CHECK(eval_event(bb(), parse_event(bb(), "reach(4+,4-)"), h));
    CHECK(!eval_event(bb(), parse_event(bb(), "reach(4-,4+)"), bb().empty_mask()));
}

TEST_CASE("paths may switch layers through verticals") {
    // 1- -> 2- -> (vertical) 2+ -> 3+.
    SubgraphMask h = mask_of({lower_edge("1", "2"), bb().vertical(bb().base().at("2")),
                              upper_edge("2", "3")});
    CHECK(eval_event(bb(), parse_event(bb(), "reach(1-,3+)"), h));
    CHECK(!eval_event(bb(), parse_event(bb(), "reach(1-,3-)"), h));
    // Horizontal edges are directed: no way back.
    CHECK(!eval_event(bb(), parse_event(bb(), "reach(3+,1-)"), h));
}

TEST_CASE("reachWithin restricts to the induced subgraph") {
    // 3- -> 4- -> 5- exists, but 4- is outside the allowed set.
    SubgraphMask h = mask_of({lower_edge("3", "4"), lower_edge("4", "5")});
    Event inside = parse_event(bb(), "reachWithin([3-,5-],3-,5-)");
    Event anywhere = parse_event(bb(), "reach(3-,5-)");
    CHECK(eval_event(bb(), anywhere, h));
    CHECK(!eval_event(bb(), inside, h));
    Event with4 = parse_event(bb(), "reachWithin([3-,4-,5-],3-,5-)");
    CHECK(eval_event(bb(), with4, h));
}

TEST_CASE("posts events") {
    int v2 = bb().base().at("2"), v5 = bb().base().at("5"), v8 = bb().base().at("8");
    SubgraphMask h = mask_of({bb().vertical(v2), bb().vertical(v5), bb().vertical(v8)});
    CHECK(eval_event(bb(), parse_event(bb(), "postsExactly(2,5,8)"), h));
    CHECK(eval_event(bb(), parse_event(bb(), "postsInclude(2,5)"), h));
    h.set(bb().vertical(bb().base().at("1")));
    CHECK(!eval_event(bb(), parse_event(bb(), "postsExactly(2,5,8)"), h));
    CHECK(eval_event(bb(), parse_event(bb(), "postsInclude(2,5)"), h));
}

TEST_CASE("edge atoms name endpoints, including verticals") {
    Event lo = parse_event(bb(), "edge(1-,4-)");
    CHECK(eval_event(bb(), lo, mask_of({lower_edge("1", "4")})));
    CHECK(!eval_event(bb(), lo, mask_of({upper_edge("1", "4")})));
    Event vert = parse_event(bb(), "edge(6-,6+)");
    CHECK(eval_event(bb(), vert, mask_of({bb().vertical(bb().base().at("6"))})));
    CHECK_THROWS_AS(parse_event(bb(), "edge(1-,9-)"), ParseError);
    CHECK_THROWS_AS(parse_event(bb(), "edge(1-,4+)"), ParseError);
}

TEST_CASE("boolean connectives") {
    SubgraphMask h = mask_of({lower_edge("1", "2")});
    CHECK(eval_event(bb(), parse_event(bb(), "and(reach(1-,2-),not(reach(1-,3-)))"), h));
    CHECK(eval_event(bb(), parse_event(bb(), "or(reach(1-,3-),true)"), h));
    CHECK(!eval_event(bb(), parse_event(bb(), "not(true)"), h));
    // n-ary forms collapse to nested binary nodes.
    CHECK(eval_event(bb(), parse_event(bb(), "and(true,true,reach(1-,2-))"), h));
}

TEST_CASE("parser round trips through the printer") {
    for (const char* text : {
             "reach(1-,9+)",
             "and(reach(1-,9-),not(or(reach(1-,5-),reach(1-,5+))))",
             "postsExactly(2,5,8)",
             "postsInclude(2)",
             "reachWithin([3-,9-,3+,9+],3-,9-)",
             "edge(1-,4-)",
             "edge(2-,2+)",
         }) {
        Event ev = parse_event(bb(), text);
        CHECK(event_to_string(bb(), ev) == text);
        Event again = parse_event(bb(), event_to_string(bb(), ev));
        CHECK(event_to_string(bb(), again) == text);
    }
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_event(bb(), "reach(1-)"), ParseError);
    CHECK_THROWS_AS(parse_event(bb(), "frobnicate(1-,2-)"), ParseError);
    CHECK_THROWS_AS(parse_event(bb(), "reach(1-,42-)"), UnknownVertexError);
    CHECK_THROWS_AS(parse_event(bb(), "and(reach(1-,2-)"), ParseError);
}

TEST_CASE("event support covers exactly the influencing edges") {
    // An edge atom depends on that edge alone.
    SubgraphMask s = event_support(bb(), parse_event(bb(), "edge(1-,4-)"));
    CHECK(s.count() == 1);
    CHECK(s.test(lower_edge("1", "4")));

    // postsExactly depends on every vertical and nothing else.
    s = event_support(bb(), parse_event(bb(), "postsExactly(2,5,8)"));
    CHECK(s.count() == bb().base_vertices());
    for (int v = 0; v < bb().base_vertices(); ++v) CHECK(s.test(bb().vertical(v)));

    // reach(8-,9-) can only use edges between {8,9} in both layers.
    s = event_support(bb(), parse_event(bb(), "reach(8-,9-)"));
    CHECK(s.test(lower_edge("8", "9")));
    CHECK(s.test(upper_edge("8", "9")));
    CHECK(s.test(bb().vertical(bb().base().at("8"))));
    CHECK(s.test(bb().vertical(bb().base().at("9"))));
    CHECK(s.count() == 4);
    // Support is an upper bound certificate: flipping any edge outside it
    // never changes the event.
    Event ev = parse_event(bb(), "reach(8-,9-)");
    SubgraphMask h = mask_of({lower_edge("1", "2"), upper_edge("8", "9"),
                              bb().vertical(bb().base().at("9"))});
    bool before = eval_event(bb(), ev, h);
    for (int e = 0; e < bb().edge_count(); ++e) {
        if (s.test(e)) continue;
        SubgraphMask h2 = h;
        h2.set(e, !h2.test(e));
        CHECK(eval_event(bb(), ev, h2) == before);
    }
}

TEST_CASE("events refuse vertices outside the graph") {
    CHECK_THROWS_AS(ev_reach(bb(), {42, Layer::Lower}, {0, Layer::Lower}),
                    UnboundReferenceError);
    CHECK_THROWS_AS(ev_edge(bb(), 99), UnboundReferenceError);
    CHECK_THROWS_AS(ev_posts_include(bb(), {123}), UnboundReferenceError);
}
