#include <doctest.h>

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/graph.hpp"
#include "bunkbed/graph_io.hpp"

#include <sstream>

using namespace bunkbed;

TEST_CASE("digraph construction validates its input") {
    CHECK_THROWS_AS(build_digraph({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(build_digraph({"a", "b"}, {{"a", "c"}}), UnknownEndpointError);
    CHECK_THROWS_AS(build_digraph({"a"}, {{"a", "a"}}), SelfLoopError);
    CHECK_THROWS_AS(build_digraph({"a", "b"}, {{"a", "b"}, {"a", "b"}}), DuplicateEdgeError);

    DiGraph g = build_digraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.at("b") == 1);
    CHECK(g.find("zzz") == -1);
    CHECK(g.find_edge(0, 1) == 0);
    CHECK(g.find_edge(1, 0) == -1);
}

TEST_CASE("topological order and acyclicity") {
    DiGraph g = build_digraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(is_acyclic(g));
    CHECK(topological_order(g) == std::vector<int>{0, 1, 2});

    DiGraph cyc = build_digraph({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(!is_acyclic(cyc));
    CHECK_THROWS_AS(topological_order(cyc), BaseNotAcyclicError);
}

TEST_CASE("the base graph is acyclic and maps onto itself under reversal") {
    DiGraph g = build_g1();
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 11);
    CHECK(is_acyclic(g));

    // Reversing every arrow and renaming i -> 10-i reproduces the graph.
    std::map<std::string, std::string> relabel;
    for (int i = 1; i <= 9; ++i) relabel[std::to_string(i)] = std::to_string(10 - i);
    DiGraph r = reverse_and_relabel(g, relabel);
    CHECK(r == g);

    std::map<std::string, std::string> bad = relabel;
    bad["1"] = "9";
    bad["9"] = "9";
    CHECK_THROWS_AS(reverse_and_relabel(g, bad), NotABijectionError);
}

TEST_CASE("edge-reachability around blocked vertices") {
    DiGraph g = build_g1();
    // Blocking 3 and 4 cuts the pocket {1,2}; edges incident to a blocked
    // vertex still count once their other endpoint is reached.
    std::set<int> r = reachable_edge_set(g, "9", {"3", "4"});
    CHECK(r.count(g.find_edge(g.at("8"), g.at("9"))) == 1);
    CHECK(r.count(g.find_edge(g.at("3"), g.at("7"))) == 1);
    CHECK(r.count(g.find_edge(g.at("4"), g.at("5"))) == 1);
    CHECK(r.count(g.find_edge(g.at("3"), g.at("4"))) == 0);
    CHECK(r.count(g.find_edge(g.at("1"), g.at("2"))) == 0);
    CHECK(r.count(g.find_edge(g.at("2"), g.at("3"))) == 0);

    // A blocked starting vertex reaches nothing.
    CHECK(reachable_edge_set(g, "9", {"9"}).empty());

    // Unblocked: every edge is reachable by an undirected path.
    CHECK(reachable_edge_set(g, "9", {}).size() == 11);
}

TEST_CASE("gadget blow-up structure") {
    DiGraph g = build_g1();
    for (int k : {1, 3}) {
        DiGraph b = blowup(g, {"2", "5", "8"}, k);
        CHECK(b.vertex_count() == 12 + 3 * k);
        CHECK(b.edge_count() == 11 + 6 * k);
        CHECK(is_acyclic(b));
        // In-edges arrive at the a-side, out-edges leave the b-side.
        CHECK(b.find_edge(b.at("1"), b.at("2a")) >= 0);
        CHECK(b.find_edge(b.at("2b"), b.at("3")) >= 0);
        CHECK(b.find_edge(b.at("2a"), b.at("2_1")) >= 0);
        CHECK(b.find_edge(b.at("2_1"), b.at("2b")) >= 0);
        CHECK(b.find_edge(b.at("2a"), b.at("2b")) == -1);
    }
    // 8 and 9 are adjacent, so they cannot both be blown up.
    CHECK_THROWS_AS(blowup(g, {"8", "9"}, 1), AdjacentBlowupVerticesError);
}

TEST_CASE("bunkbed edge table and vertex naming") {
    BunkbedGraph bb(build_g1());
    CHECK(bb.edge_count() == 31);
    CHECK(bb.vertex_count() == 18);

    BunkbedEdge lo = bb.edge(0);
    CHECK(lo.kind == EdgeKind::Horizontal);
    CHECK(lo.layer == Layer::Lower);
    BunkbedEdge up = bb.edge(bb.upper(0));
    CHECK(up.kind == EdgeKind::Horizontal);
    CHECK(up.layer == Layer::Upper);
    BunkbedEdge vert = bb.edge(bb.vertical(4));
    CHECK(vert.kind == EdgeKind::Vertical);
    CHECK(vert.index == 4);

    BunkbedVertex v = bb.parse_vertex("7+");
    CHECK(bb.base().label(v.base) == "7");
    CHECK(v.layer == Layer::Upper);
    CHECK(bb.vertex_name(v) == "7+");
    CHECK(bb.vertex_of(bb.vid(v)) == v);
    CHECK_THROWS_AS(bb.parse_vertex("77"), UnknownVertexError);
    CHECK_THROWS_AS(bb.parse_vertex("0-"), UnknownVertexError);
}

TEST_CASE("mirroring swaps exactly the selected shadows and preserves posts") {
    BunkbedGraph bb(build_g1());
    SubgraphMask h = bb.empty_mask();
    h.set(bb.lower(0));
    h.set(bb.upper(1));
    h.set(bb.vertical(3));

    SubgraphMask m = mirror_subgraph(bb, h, {0});
    CHECK(!m.test(bb.lower(0)));
    CHECK(m.test(bb.upper(0)));
    CHECK(m.test(bb.upper(1))); // shadow 1 not selected
    CHECK(m.test(bb.vertical(3)));
    CHECK(posts(bb, m) == posts(bb, h));
    CHECK(mirror_subgraph(bb, m, {0}) == h);
}

TEST_CASE("graph file round trip") {
    DiGraph g = build_g1();
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    CHECK(read_graph(in) == g);

    std::istringstream bad("v a\ne a b\n");
    CHECK_THROWS_AS(read_graph(bad), Error);
    std::istringstream junk("x nonsense\n");
    CHECK_THROWS_AS(read_graph(junk), ParseError);
}
