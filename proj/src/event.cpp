#include "bunkbed/event.hpp"

#include "bunkbed/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>

namespace bunkbed {

namespace {

std::shared_ptr<const Event::Node> make_node(Event::Node n) {
    return std::make_shared<const Event::Node>(std::move(n));
}

void check_vertex(const BunkbedGraph& bb, BunkbedVertex v) {
    if (v.base < 0 || v.base >= bb.base_vertices())
        throw UnboundReferenceError("bunkbed vertex base " + std::to_string(v.base));
}

} // namespace

std::shared_ptr<const Event::Node> Event::truth_node() {
    static const auto n = make_node(Node{});
    return n;
}

Event ev_true() { return Event(Event::truth_node()); }

Event ev_reach(const BunkbedGraph& bb, BunkbedVertex x, BunkbedVertex y) {
    check_vertex(bb, x);
    check_vertex(bb, y);
    Event::Node n;
    n.op = Event::Op::Reach;
    n.x = bb.vid(x);
    n.y = bb.vid(y);
    return Event(make_node(std::move(n)));
}

Event ev_reach_within(const BunkbedGraph& bb, const std::vector<BunkbedVertex>& within,
                      BunkbedVertex x, BunkbedVertex y) {
    check_vertex(bb, x);
    check_vertex(bb, y);
    Event::Node n;
    n.op = Event::Op::ReachWithin;
    n.x = bb.vid(x);
    n.y = bb.vid(y);
    for (BunkbedVertex v : within) {
        check_vertex(bb, v);
        int id = bb.vid(v);
        n.within_ids.push_back(id);
        if (bb.vertex_count() <= 64) n.within |= std::uint64_t(1) << id;
    }
    std::sort(n.within_ids.begin(), n.within_ids.end());
    n.within_ids.erase(std::unique(n.within_ids.begin(), n.within_ids.end()), n.within_ids.end());
    return Event(make_node(std::move(n)));
}

Event ev_edge(const BunkbedGraph& bb, int edge_index) {
    if (edge_index < 0 || edge_index >= bb.edge_count())
        throw UnboundReferenceError("bunkbed edge " + std::to_string(edge_index));
    Event::Node n;
    n.op = Event::Op::EdgePresent;
    n.edge = edge_index;
    return Event(make_node(std::move(n)));
}

namespace {
Event::Node posts_node(const BunkbedGraph& bb, const std::set<int>& s, Event::Op op) {
    for (int v : s)
        if (v < 0 || v >= bb.base_vertices())
            throw UnboundReferenceError("base vertex " + std::to_string(v));
    Event::Node n;
    n.op = op;
    n.vset = s;
    return n;
}
} // namespace

Event ev_posts_include(const BunkbedGraph& bb, const std::set<int>& s) {
    return Event(make_node(posts_node(bb, s, Event::Op::PostsInclude)));
}
Event ev_posts_exactly(const BunkbedGraph& bb, const std::set<int>& s) {
    return Event(make_node(posts_node(bb, s, Event::Op::PostsExactly)));
}

Event ev_and(Event a, Event b) {
    Event::Node n;
    n.op = Event::Op::And;
    n.kids = {std::move(a), std::move(b)};
    return Event(make_node(std::move(n)));
}
Event ev_or(Event a, Event b) {
    Event::Node n;
    n.op = Event::Op::Or;
    n.kids = {std::move(a), std::move(b)};
    return Event(make_node(std::move(n)));
}
Event ev_not(Event a) {
    Event::Node n;
    n.op = Event::Op::Not;
    n.kids = {std::move(a)};
    return Event(make_node(std::move(n)));
}

// ---------------------------------------------------------------------------

EvalContext::EvalContext(const BunkbedGraph& bb)
    : bb_(bb), small_(bb.vertex_count() <= 64) {
    int ne = bb.edge_count();
    eps_.reserve(ne);
    for (int i = 0; i < ne; ++i) {
        BunkbedEdge e = bb.edge(i);
        if (e.kind == EdgeKind::Horizontal) {
            auto [u, v] = bb.base().edges()[e.index];
            eps_.push_back({bb.vid({u, e.layer}), bb.vid({v, e.layer}), false});
        } else {
            eps_.push_back({bb.vid({e.index, Layer::Lower}), bb.vid({e.index, Layer::Upper}), true});
        }
    }
    if (small_)
        rows_.assign(bb.vertex_count(), 0);
    else
        adj_.assign(bb.vertex_count(), {});
    mask_ = bb.empty_mask();
}

void EvalContext::load(const SubgraphMask& H) {
    if (H.size() != bb_.edge_count()) throw UnboundReferenceError("mask size mismatch");
    mask_ = H;
    have_mask_ = true;
    memo_.clear();
    if (small_) {
        std::fill(rows_.begin(), rows_.end(), 0);
        for (int i = 0; i < bb_.edge_count(); ++i) {
            if (!H.test(i)) continue;
            const Ep& e = eps_[i];
            rows_[e.from] |= std::uint64_t(1) << e.to;
            if (e.bidir) rows_[e.to] |= std::uint64_t(1) << e.from;
        }
    } else {
        for (auto& a : adj_) a.clear();
        for (int i = 0; i < bb_.edge_count(); ++i) {
            if (!H.test(i)) continue;
            const Ep& e = eps_[i];
            adj_[e.from].push_back(e.to);
            if (e.bidir) adj_[e.to].push_back(e.from);
        }
    }
}

void EvalContext::load_word(std::uint64_t mask) {
    if (bb_.edge_count() > 64) throw UnboundReferenceError("graph too large for word masks");
    mask_.word0() = mask;
    have_mask_ = true;
    memo_.clear();
    std::fill(rows_.begin(), rows_.end(), 0);
    std::uint64_t m = mask;
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        const Ep& e = eps_[i];
        rows_[e.from] |= std::uint64_t(1) << e.to;
        if (e.bidir) rows_[e.to] |= std::uint64_t(1) << e.from;
    }
}

std::uint64_t EvalContext::reach_set_small(int x, std::uint64_t vertex_mask) {
    std::uint64_t reached = std::uint64_t(1) << x;
    std::uint64_t frontier = reached & vertex_mask;
    // When x is outside the induced set it has no usable out-edges.
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int b = std::countr_zero(f);
            f &= f - 1;
            next |= rows_[b];
        }
        next &= vertex_mask;
        frontier = next & ~reached;
        reached |= next;
    }
    return reached;
}

bool EvalContext::reach_general(const std::vector<int>* within, int x, int y) {
    if (x == y) return true;
    std::vector<char> in_set;
    if (within) {
        in_set.assign(bb_.vertex_count(), 0);
        for (int v : *within) in_set[v] = 1;
    }
    std::vector<char> seen(bb_.vertex_count(), 0);
    std::deque<int> q;
    seen[x] = 1;
    if (!within || in_set[x]) q.push_back(x);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj_[v]) {
            if (within && !in_set[w]) continue;
            if (seen[w]) continue;
            if (w == y) return true;
            seen[w] = 1;
            q.push_back(w);
        }
    }
    return false;
}

bool EvalContext::reach(int x, int y) {
    if (!have_mask_) throw UnboundReferenceError("no configuration loaded");
    if (x == y) return true;
    if (small_) {
        auto it = memo_.find(x);
        std::uint64_t r;
        if (it != memo_.end()) {
            r = it->second;
        } else {
            r = reach_set_small(x, ~std::uint64_t(0));
            memo_.emplace(x, r);
        }
        return (r >> y) & 1;
    }
    return reach_general(nullptr, x, y);
}

bool EvalContext::reach_within(std::uint64_t within, int x, int y) {
    if (x == y) return true;
    if (small_) return (reach_set_small(x, within) >> y) & 1;
    throw UnboundReferenceError("reach_within word form on large graph");
}

bool EvalContext::eval(const Event& ev) {
    const Event::Node& n = ev.node();
    switch (n.op) {
    case Event::Op::True:
        return true;
    case Event::Op::Reach:
        return reach(n.x, n.y);
    case Event::Op::ReachWithin:
        if (small_) return reach_within(n.within, n.x, n.y);
        return reach_general(&n.within_ids, n.x, n.y);
    case Event::Op::EdgePresent:
        return mask_.test(n.edge);
    case Event::Op::PostsInclude:
        for (int v : n.vset)
            if (!mask_.test(bb_.vertical(v))) return false;
        return true;
    case Event::Op::PostsExactly:
        for (int v = 0; v < bb_.base_vertices(); ++v)
            if (mask_.test(bb_.vertical(v)) != (n.vset.count(v) != 0)) return false;
        return true;
    case Event::Op::And:
        for (const Event& k : n.kids)
            if (!eval(k)) return false;
        return true;
    case Event::Op::Or:
        for (const Event& k : n.kids)
            if (eval(k)) return true;
        return false;
    case Event::Op::Not:
        return !eval(n.kids[0]);
    }
    return false;
}

bool reaches(const BunkbedGraph& bb, const SubgraphMask& H, BunkbedVertex x, BunkbedVertex y) {
    EvalContext ctx(bb);
    ctx.load(H);
    return ctx.reach(bb.vid(x), bb.vid(y));
}

bool eval_event(const BunkbedGraph& bb, const Event& ev, const SubgraphMask& H) {
    EvalContext ctx(bb);
    ctx.load(H);
    return ctx.eval(ev);
}

// ---------------------------------------------------------------------------

namespace {

// Forward/backward vertex reachability in the full bunkbed graph,
// optionally restricted to an induced vertex set.
std::vector<char> full_reach(const BunkbedGraph& bb, int start, bool forward,
                             const std::vector<int>* within) {
    int nv = bb.vertex_count();
    std::vector<char> in_set;
    if (within) {
        in_set.assign(nv, 0);
        for (int v : *within) in_set[v] = 1;
    }
    std::vector<std::vector<int>> adj(nv);
    auto add = [&](int a, int b) {
        if (within && (!in_set[a] || !in_set[b])) return;
        adj[forward ? a : b].push_back(forward ? b : a);
    };
    for (int i = 0; i < bb.base_edges(); ++i) {
        auto [u, v] = bb.base().edges()[i];
        add(bb.vid({u, Layer::Lower}), bb.vid({v, Layer::Lower}));
        add(bb.vid({u, Layer::Upper}), bb.vid({v, Layer::Upper}));
    }
    for (int v = 0; v < bb.base_vertices(); ++v) {
        add(bb.vid({v, Layer::Lower}), bb.vid({v, Layer::Upper}));
        add(bb.vid({v, Layer::Upper}), bb.vid({v, Layer::Lower}));
    }
    std::vector<char> seen(nv, 0);
    std::deque<int> q{start};
    seen[start] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                q.push_back(w);
            }
    }
    return seen;
}

void support_rec(const BunkbedGraph& bb, const Event& ev, SubgraphMask& out) {
    const Event::Node& n = ev.node();
    switch (n.op) {
    case Event::Op::True:
        break;
    case Event::Op::Reach:
    case Event::Op::ReachWithin: {
        const std::vector<int>* within =
            n.op == Event::Op::ReachWithin ? &n.within_ids : nullptr;
        std::vector<char> desc = full_reach(bb, n.x, true, within);
        std::vector<char> anc = full_reach(bb, n.y, false, within);
        std::vector<char> in_set;
        if (within) {
            in_set.assign(bb.vertex_count(), 0);
            for (int v : *within) in_set[v] = 1;
        }
        auto on_path = [&](int a, int b) {
            if (within && (!in_set[a] || !in_set[b])) return false;
            return desc[a] && anc[b];
        };
        for (int i = 0; i < bb.base_edges(); ++i) {
            auto [u, v] = bb.base().edges()[i];
            if (on_path(bb.vid({u, Layer::Lower}), bb.vid({v, Layer::Lower})))
                out.set(bb.lower(i));
            if (on_path(bb.vid({u, Layer::Upper}), bb.vid({v, Layer::Upper})))
                out.set(bb.upper(i));
        }
        for (int v = 0; v < bb.base_vertices(); ++v) {
            int lo = bb.vid({v, Layer::Lower}), hi = bb.vid({v, Layer::Upper});
            if (on_path(lo, hi) || on_path(hi, lo)) out.set(bb.vertical(v));
        }
        break;
    }
    case Event::Op::EdgePresent:
        out.set(n.edge);
        break;
    case Event::Op::PostsInclude:
        for (int v : n.vset) out.set(bb.vertical(v));
        break;
    case Event::Op::PostsExactly:
        for (int v = 0; v < bb.base_vertices(); ++v) out.set(bb.vertical(v));
        break;
    case Event::Op::And:
    case Event::Op::Or:
    case Event::Op::Not:
        for (const Event& k : n.kids) support_rec(bb, k, out);
        break;
    }
}

} // namespace

SubgraphMask event_support(const BunkbedGraph& bb, const Event& ev) {
    SubgraphMask out = bb.empty_mask();
    support_rec(bb, ev, out);
    return out;
}

// --------------------------- textual form ---------------------------------

namespace {

struct Parser {
    const BunkbedGraph& bb;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    }
    std::string token() {
        skip();
        size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
               std::string("()[],").find(s[pos]) == std::string::npos)
            ++pos;
        if (start == pos) throw ParseError("expected token at offset " + std::to_string(pos));
        return s.substr(start, pos - start);
    }

    BunkbedVertex vertex() { return bb.parse_vertex(token()); }

    Event expr() {
        std::string name = token();
        std::string low;
        for (char c : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (low == "true") return ev_true();
        expect('(');
        Event result;
        if (low == "and" || low == "or") {
            std::vector<Event> kids;
            kids.push_back(expr());
            while (peek() == ',') {
                ++pos;
                kids.push_back(expr());
            }
            result = kids[0];
            for (size_t i = 1; i < kids.size(); ++i)
                result = low == "and" ? ev_and(result, kids[i]) : ev_or(result, kids[i]);
        } else if (low == "not") {
            result = ev_not(expr());
        } else if (low == "reach") {
            BunkbedVertex x = vertex();
            expect(',');
            BunkbedVertex y = vertex();
            result = ev_reach(bb, x, y);
        } else if (low == "reachwithin") {
            expect('[');
            std::vector<BunkbedVertex> within;
            if (peek() != ']') {
                within.push_back(vertex());
                while (peek() == ',') {
                    ++pos;
                    within.push_back(vertex());
                }
            }
            expect(']');
            expect(',');
            BunkbedVertex x = vertex();
            expect(',');
            BunkbedVertex y = vertex();
            result = ev_reach_within(bb, within, x, y);
        } else if (low == "edge") {
            BunkbedVertex a = vertex();
            expect(',');
            BunkbedVertex b = vertex();
            result = ev_edge(bb, edge_index(a, b));
        } else if (low == "postsinclude" || low == "postsexactly") {
            std::set<int> vs;
            if (peek() != ')') {
                vs.insert(bb.base().at(token()));
                while (peek() == ',') {
                    ++pos;
                    vs.insert(bb.base().at(token()));
                }
            }
            result = low == "postsinclude" ? ev_posts_include(bb, vs) : ev_posts_exactly(bb, vs);
        } else {
            throw ParseError("unknown event '" + name + "'");
        }
        expect(')');
        return result;
    }

    int edge_index(BunkbedVertex a, BunkbedVertex b) {
        if (a.base == b.base && a.layer != b.layer) return bb.vertical(a.base);
        if (a.layer == b.layer) {
            int e = bb.base().find_edge(a.base, b.base);
            if (e >= 0) return bb.horizontal(e, a.layer);
        }
        throw ParseError("no bunkbed edge " + bb.vertex_name(a) + "," + bb.vertex_name(b));
    }
};

void print_rec(const BunkbedGraph& bb, const Event& ev, std::string& out) {
    const Event::Node& n = ev.node();
    auto vname = [&](int vid) { return bb.vertex_name(bb.vertex_of(vid)); };
    switch (n.op) {
    case Event::Op::True:
        out += "true";
        break;
    case Event::Op::Reach:
        out += "reach(" + vname(n.x) + "," + vname(n.y) + ")";
        break;
    case Event::Op::ReachWithin: {
        out += "reachWithin([";
        bool first = true;
        for (int v : n.within_ids) {
            if (!first) out += ",";
            first = false;
            out += vname(v);
        }
        out += "]," + vname(n.x) + "," + vname(n.y) + ")";
        break;
    }
    case Event::Op::EdgePresent: {
        BunkbedEdge e = bb.edge(n.edge);
        if (e.kind == EdgeKind::Vertical) {
            out += "edge(" + bb.base().label(e.index) + "-," + bb.base().label(e.index) + "+)";
        } else {
            auto [u, v] = bb.base().edges()[e.index];
            const char* sign = e.layer == Layer::Lower ? "-" : "+";
            out += "edge(" + bb.base().label(u) + sign + "," + bb.base().label(v) + sign + ")";
        }
        break;
    }
    case Event::Op::PostsInclude:
    case Event::Op::PostsExactly: {
        out += n.op == Event::Op::PostsInclude ? "postsInclude(" : "postsExactly(";
        bool first = true;
        for (int v : n.vset) {
            if (!first) out += ",";
            first = false;
            out += bb.base().label(v);
        }
        out += ")";
        break;
    }
    case Event::Op::And:
    case Event::Op::Or: {
        out += n.op == Event::Op::And ? "and(" : "or(";
        for (size_t i = 0; i < n.kids.size(); ++i) {
            if (i) out += ",";
            print_rec(bb, n.kids[i], out);
        }
        out += ")";
        break;
    }
    case Event::Op::Not:
        out += "not(";
        print_rec(bb, n.kids[0], out);
        out += ")";
        break;
    }
}

} // namespace

Event parse_event(const BunkbedGraph& bb, const std::string& text) {
    Parser p{bb, text};
    Event ev = p.expr();
    if (p.peek() != '\0') throw ParseError("trailing input at offset " + std::to_string(p.pos));
    return ev;
}

std::string event_to_string(const BunkbedGraph& bb, const Event& ev) {
    std::string out;
    print_rec(bb, ev, out);
    return out;
}

} // namespace bunkbed
