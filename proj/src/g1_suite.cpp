#include "bunkbed/g1_suite.hpp"

#include "bunkbed/enumerate.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/graph.hpp"
#include "bunkbed/reach_dp.hpp"
#include "bunkbed/rng.hpp"

#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <thread>

namespace bunkbed {

const BunkbedGraph& g1_bunkbed() {
    static const BunkbedGraph bb(build_g1());
    return bb;
}

const EdgeModel& g1_conditioned() {
    static const EdgeModel m = conditioned_model(g1_bunkbed(), {"2", "5", "8"});
    return m;
}

std::map<std::string, Event> g1_event_table(const BunkbedGraph& bb) {
    if (!(bb.base() == build_g1())) throw UnboundReferenceError("event table needs the base graph G1");
    auto v = [&](const std::string& s) { return bb.parse_vertex(s); };
    Event A = ev_reach(bb, v("1-"), v("9-"));
    Event B = ev_reach(bb, v("1-"), v("9+"));
    Event F = ev_posts_exactly(bb, {bb.base().at("2"), bb.base().at("5"), bb.base().at("8")});
    Event to5 = ev_or(ev_reach(bb, v("1-"), v("5-")), ev_reach(bb, v("1-"), v("5+")));
    Event to3m = ev_reach(bb, v("1-"), v("3-"));
    Event to3p = ev_reach(bb, v("1-"), v("3+"));
    Event to3 = ev_or(to3m, to3p);

    std::vector<BunkbedVertex> shaded;
    for (const std::string& b : {"3", "5", "6", "7", "8", "9"}) {
        shaded.push_back(v(b + "-"));
        shaded.push_back(v(b + "+"));
    }

    std::map<std::string, Event> t;
    t.emplace("A", A);
    t.emplace("B", B);
    t.emplace("F", F);
    t.emplace("A1", ev_and(A, ev_not(F)));
    t.emplace("A2", ev_and(ev_and(A, F), ev_not(to5)));
    t.emplace("A3", ev_and(ev_and(ev_and(A, F), to5), ev_not(to3)));
    t.emplace("A4", ev_and(ev_and(ev_and(ev_and(A, F), to3m), to3p), to5));
    t.emplace("B1", ev_and(B, ev_not(F)));
    t.emplace("B2", ev_and(ev_and(B, F), ev_not(to5)));
    t.emplace("B3", ev_and(ev_and(ev_and(B, F), to5), ev_not(to3)));
    t.emplace("B4", ev_and(ev_and(ev_and(ev_and(B, F), to3m), to3p), to5));
    t.emplace("P-", ev_and(ev_and(to3m, to5), ev_not(to3p)));
    t.emplace("P+", ev_and(ev_and(to3p, to5), ev_not(to3m)));
    for (const char* eps : {"-", "+"}) {
        for (const char* del : {"-", "+"}) {
            Event within = ev_reach_within(bb, shaded, v(std::string("3") + eps),
                                           v(std::string("9") + del));
            Event five = ev_or(ev_reach(bb, v("5-"), v(std::string("9") + del)),
                               ev_reach(bb, v("5+"), v(std::string("9") + del)));
            t.emplace(std::string("Q") + eps + del, ev_or(within, five));
        }
    }
    t.emplace("R", ev_edge(bb, bb.lower(bb.base().find_edge(bb.base().at("1"), bb.base().at("4")))));
    return t;
}

// ---------------------------------------------------------------------------
// Fast sweep over the conditioned model on G1. 31 bunkbed edges in one
// word: lower horizontals 0..10, upper 11..21, verticals 22..30; verticals
// at {2,5,8} forced.

namespace {

constexpr int kBaseEdges = 11;
constexpr int kBaseVerts = 9;
constexpr std::uint32_t kLowerMask = (1u << kBaseEdges) - 1;

inline std::uint32_t mirror_word(std::uint32_t m, std::uint32_t shadow_lower) {
    std::uint32_t affected = shadow_lower | (shadow_lower << kBaseEdges);
    return (m & ~affected) | ((m & shadow_lower) << kBaseEdges) |
           ((m >> kBaseEdges) & shadow_lower);
}

struct G1Fast {
    struct Ep {
        std::uint8_t from, to;
        bool bidir;
    };
    std::array<Ep, 31> eps{};
    std::uint32_t rows[18];

    std::uint32_t forced = 0;
    std::uint32_t free_verts = 0;
    int sbit_of_vert[kBaseVerts];
    std::uint32_t shaded_vids = 0;
    std::array<std::uint32_t, 64> rs_lower{};
    std::uint32_t k_set = 0, k37_set = 0, e89_set = 0, front_set = 0, all_set = kLowerMask;
    std::array<std::uint8_t, 31> sigma{};
    int vid_9m, vid_9p, vid_3m, vid_3p, vid_5m, vid_5p, vid_7m, vid_7p, vid_1m;
    int r_edge_bit;

    G1Fast() {
        const BunkbedGraph& bb = g1_bunkbed();
        const DiGraph& g = bb.base();
        assert(bb.edge_count() == 31 && bb.vertex_count() == 18);
        for (int i = 0; i < 31; ++i) {
            BunkbedEdge e = bb.edge(i);
            if (e.kind == EdgeKind::Horizontal) {
                auto [u, v] = g.edges()[e.index];
                eps[i] = {static_cast<std::uint8_t>(bb.vid({u, e.layer})),
                          static_cast<std::uint8_t>(bb.vid({v, e.layer})), false};
            } else {
                eps[i] = {static_cast<std::uint8_t>(bb.vid({e.index, Layer::Lower})),
                          static_cast<std::uint8_t>(bb.vid({e.index, Layer::Upper})), true};
            }
        }
        std::set<int> t_ids = {g.at("2"), g.at("5"), g.at("8")};
        int sbit = 0;
        for (int v = 0; v < kBaseVerts; ++v) {
            if (t_ids.count(v)) {
                forced |= 1u << bb.vertical(v);
                sbit_of_vert[v] = -1;
            } else {
                free_verts |= 1u << bb.vertical(v);
                sbit_of_vert[v] = sbit++;
            }
        }
        for (const std::string& b : {"3", "5", "6", "7", "8", "9"}) {
            shaded_vids |= 1u << bb.vid({g.at(b), Layer::Lower});
            shaded_vids |= 1u << bb.vid({g.at(b), Layer::Upper});
        }
        // R(S) for every non-empty extra-post set S.
        std::vector<int> free_ids;
        for (int v = 0; v < kBaseVerts; ++v)
            if (!t_ids.count(v)) free_ids.push_back(v);
        for (int S = 1; S < 64; ++S) {
            std::set<std::string> blocked = {"2", "5", "8"};
            for (int j = 0; j < 6; ++j)
                if (S >> j & 1) blocked.insert(g.label(free_ids[j]));
            for (int e : reachable_edge_set(g, "9", blocked)) rs_lower[S] |= 1u << e;
        }
        auto base_edge = [&](const char* a, const char* b) {
            int e = g.find_edge(g.at(a), g.at(b));
            assert(e >= 0);
            return e;
        };
        for (auto [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
                 {"5", "6"}, {"6", "7"}, {"6", "9"}, {"7", "8"}, {"8", "9"}})
            k_set |= 1u << base_edge(a, b);
        k37_set = k_set | (1u << base_edge("3", "7"));
        e89_set = 1u << base_edge("8", "9");
        for (auto [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
                 {"2", "3"}, {"3", "4"}, {"4", "5"}})
            front_set |= 1u << base_edge(a, b);
        // Arrow-reversing relabelling i -> 10-i on edge indices.
        auto img = [&](int v) { return g.at(std::to_string(10 - std::stoi(g.label(v)))); };
        for (int e = 0; e < kBaseEdges; ++e) {
            auto [u, v] = g.edges()[e];
            int e2 = g.find_edge(img(v), img(u));
            assert(e2 >= 0);
            sigma[bb.lower(e)] = static_cast<std::uint8_t>(bb.lower(e2));
            sigma[bb.upper(e)] = static_cast<std::uint8_t>(bb.upper(e2));
        }
        for (int v = 0; v < kBaseVerts; ++v)
            sigma[bb.vertical(v)] = static_cast<std::uint8_t>(bb.vertical(img(v)));
        auto vid = [&](const char* s) { return bb.vid(bb.parse_vertex(s)); };
        vid_9m = vid("9-"); vid_9p = vid("9+");
        vid_3m = vid("3-"); vid_3p = vid("3+");
        vid_5m = vid("5-"); vid_5p = vid("5+");
        vid_7m = vid("7-"); vid_7p = vid("7+");
        vid_1m = vid("1-");
        r_edge_bit = bb.lower(base_edge("1", "4"));
    }

    void load(std::uint32_t mask) {
        std::fill(std::begin(rows), std::end(rows), 0u);
        while (mask) {
            int i = std::countr_zero(mask);
            mask &= mask - 1;
            const Ep& e = eps[i];
            rows[e.from] |= 1u << e.to;
            if (e.bidir) rows[e.to] |= 1u << e.from;
        }
    }

    std::uint32_t reach(int x, std::uint32_t vmask = ~0u) const {
        std::uint32_t reached = 1u << x;
        std::uint32_t frontier = reached & vmask;
        while (frontier) {
            std::uint32_t next = 0, f = frontier;
            while (f) {
                int b = std::countr_zero(f);
                f &= f - 1;
                next |= rows[b];
            }
            next &= vmask;
            frontier = next & ~reached;
            reached |= next;
        }
        return reached;
    }

    std::uint32_t apply_sigma(std::uint32_t m) const {
        std::uint32_t out = 0;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            out |= 1u << sigma[i];
        }
        return out;
    }
};

const G1Fast& g1_fast() {
    static const G1Fast f;
    return f;
}

inline void accumulate(const G1Fast& t, G1Fast& work, std::uint32_t mask,
                       G1SweepCounters& c) {
    work.load(mask);
    std::uint32_t r1 = work.reach(t.vid_1m);
    bool A = r1 >> t.vid_9m & 1;
    bool B = r1 >> t.vid_9p & 1;
    ++c.total;
    c.cA += A;
    c.cB += B;
    std::uint32_t fv = mask & t.free_verts;
    if (fv) {
        // Extra posts present: F fails. Identify the extra-post class S.
        int S = 0;
        std::uint32_t m = fv;
        while (m) {
            int bit = std::countr_zero(m);
            m &= m - 1;
            S |= 1 << t.sbit_of_vert[bit - 2 * kBaseEdges];
        }
        c.cAS[S] += A;
        c.cBS[S] += B;
        if (A) {
            work.load(mirror_word(mask, t.rs_lower[S]));
            if (!(work.reach(t.vid_1m) >> t.vid_9p & 1)) ++c.violExtraPostMirror;
        }
        return;
    }
    ++c.cF;
    c.cAF += A;
    c.cBF += B;
    bool r13m = r1 >> t.vid_3m & 1, r13p = r1 >> t.vid_3p & 1;
    bool r15 = (r1 >> t.vid_5m & 1) || (r1 >> t.vid_5p & 1);
    bool A2 = A && !r15, B2 = B && !r15;
    bool A3 = A && r15 && !r13m && !r13p, B3 = B && r15 && !r13m && !r13p;
    bool A4 = A && r15 && r13m && r13p, B4 = B && r15 && r13m && r13p;
    c.cA2 += A2; c.cA3 += A3; c.cA4 += A4;
    c.cB2 += B2; c.cB3 += B3; c.cB4 += B4;
    bool Pm = r13m && r15 && !r13p;
    bool Pp = r13p && r15 && !r13m;
    std::uint32_t r5 = work.reach(t.vid_5m) | work.reach(t.vid_5p);
    bool five9m = r5 >> t.vid_9m & 1, five9p = r5 >> t.vid_9p & 1;
    std::uint32_t i3m = work.reach(t.vid_3m, t.shaded_vids);
    std::uint32_t i3p = work.reach(t.vid_3p, t.shaded_vids);
    bool Qmm = (i3m >> t.vid_9m & 1) || five9m;
    bool Qmp = (i3m >> t.vid_9p & 1) || five9p;
    bool Qpm = (i3p >> t.vid_9m & 1) || five9m;
    bool Qpp = (i3p >> t.vid_9p & 1) || five9p;
    c.cPF[0] += Pm; c.cPF[1] += Pp;
    c.cQF[0] += Qmm; c.cQF[1] += Qmp; c.cQF[2] += Qpm; c.cQF[3] += Qpp;
    c.cPQF[0] += Pm && Qmm;
    c.cPQF[1] += Pm && Qmp;
    c.cPQF[2] += Pp && Qpm;
    c.cPQF[3] += Pp && Qpp;
    bool R = mask >> t.r_edge_bit & 1;
    c.cPRF[0] += Pm && R;
    c.cPRF[1] += Pp && R;
    int partsA = A2 + A3 + A4 + (Pm && Qmm) + (Pp && Qpm);
    if (A ? partsA != 1 : partsA != 0) ++c.violDecompA;
    int partsB = B2 + B3 + B4 + (Pm && Qmp) + (Pp && Qpp);
    if (B ? partsB != 1 : partsB != 0) ++c.violDecompB;

    // Mirror biconditionals; each reloads the work context.
    auto reach1 = [&](std::uint32_t m2) {
        work.load(m2);
        return work.reach(t.vid_1m);
    };
    if (A2) {
        std::uint32_t r = reach1(mirror_word(mask, t.e89_set));
        bool ok = (r >> t.vid_9p & 1) && !(r >> t.vid_5m & 1) && !(r >> t.vid_5p & 1);
        if (!ok) ++c.violMirror2;
    }
    if (A3) {
        std::uint32_t r = reach1(mirror_word(mask, t.k_set));
        bool ok = (r >> t.vid_9p & 1) && ((r >> t.vid_5m & 1) || (r >> t.vid_5p & 1)) &&
                  !(r >> t.vid_3m & 1) && !(r >> t.vid_3p & 1);
        if (!ok) ++c.violMirror3;
    }
    if (A4) {
        std::uint32_t r = reach1(mirror_word(mask, t.k37_set));
        bool ok = (r >> t.vid_9p & 1) && ((r >> t.vid_5m & 1) || (r >> t.vid_5p & 1)) &&
                  (r >> t.vid_3m & 1) && (r >> t.vid_3p & 1);
        if (!ok) ++c.violMirror4;
    }
    if (Pp && !R) {
        std::uint32_t r = reach1(mirror_word(mask, t.front_set));
        bool ok = (r >> t.vid_3m & 1) && ((r >> t.vid_5m & 1) || (r >> t.vid_5p & 1)) &&
                  !(r >> t.vid_3p & 1);
        if (!ok) ++c.violSwapFront;
    }
}

} // namespace

void G1SweepCounters::merge(const G1SweepCounters& o) {
    total += o.total;
    cA += o.cA; cB += o.cB; cF += o.cF; cAF += o.cAF; cBF += o.cBF;
    cA2 += o.cA2; cA3 += o.cA3; cA4 += o.cA4;
    cB2 += o.cB2; cB3 += o.cB3; cB4 += o.cB4;
    for (int i = 0; i < 64; ++i) { cAS[i] += o.cAS[i]; cBS[i] += o.cBS[i]; }
    for (int i = 0; i < 2; ++i) { cPF[i] += o.cPF[i]; cPRF[i] += o.cPRF[i]; }
    for (int i = 0; i < 4; ++i) { cQF[i] += o.cQF[i]; cPQF[i] += o.cPQF[i]; }
    violExtraPostMirror += o.violExtraPostMirror;
    violMirror2 += o.violMirror2;
    violMirror3 += o.violMirror3;
    violMirror4 += o.violMirror4;
    violSwapFront += o.violSwapFront;
    violDecompA += o.violDecompA;
    violDecompB += o.violDecompB;
}

G1SweepCounters g1_sweep(VerifyMode mode, std::uint64_t n, std::uint64_t seed, int threads) {
    const G1Fast& t = g1_fast();
    constexpr int kFreeBits = 28;
    auto spread = [&](std::uint32_t cfg) {
        // 28 free bits into edge positions, skipping the forced verticals.
        return (cfg & 0x007FFFFFu) | (((cfg >> 23) & 0x3u) << 24) |
               (((cfg >> 25) & 0x3u) << 27) | (((cfg >> 27) & 0x1u) << 30) | t.forced;
    };

    int nshards = 256;
    std::atomic<int> next_shard{0};
    std::vector<G1SweepCounters> parts(nshards);

    auto work = [&]() {
        G1Fast scratch = t;
        for (;;) {
            int s = next_shard.fetch_add(1);
            if (s >= nshards) break;
            G1SweepCounters& c = parts[s];
            if (mode == VerifyMode::Exhaustive) {
                std::uint64_t lo_count = std::uint64_t(1) << (kFreeBits - 8);
                std::uint64_t base = static_cast<std::uint64_t>(s) << (kFreeBits - 8);
                for (std::uint64_t lo = 0; lo < lo_count; ++lo)
                    accumulate(t, scratch, spread(static_cast<std::uint32_t>(base | lo)), c);
            } else {
                std::uint64_t begin = n * s / nshards, end = n * (s + 1) / nshards;
                for (std::uint64_t i = begin; i < end; ++i) {
                    std::uint32_t cfg = static_cast<std::uint32_t>(
                        SplitMix64::for_sample(seed, i).next() & ((1u << kFreeBits) - 1));
                    accumulate(t, scratch, spread(cfg), c);
                }
            }
        }
    };

    int nthreads = std::max(1, std::min(threads, nshards));
    if (nthreads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    G1SweepCounters total;
    for (const auto& p : parts) total.merge(p);
    return total;
}

// ---------------------------------------------------------------------------

std::uint64_t mirror_bicond_violations(const BunkbedGraph& bb, const EdgeModel& model,
                                       const Event& left, const Event& right,
                                       const std::set<int>& shadows) {
    int ne = bb.edge_count();
    SubgraphMask supp = event_support(bb, left);
    SubgraphMask suppR = event_support(bb, right);
    for (int i = 0; i < ne; ++i)
        if (suppR.test(i)) supp.set(i);
    // Close under mirroring across the selected shadows.
    for (int i = 0; i < ne; ++i) {
        if (!supp.test(i)) continue;
        auto [shadow, mirrored] = shadow_and_mirror(bb, i);
        if (shadow && shadows.count(*shadow)) supp.set(*mirrored);
    }
    std::vector<int> free_bits;
    SubgraphMask forced = bb.empty_mask();
    for (int i = 0; i < ne; ++i) {
        if (model.is_forced_present(i)) forced.set(i);
        else if (model.is_free(i) && supp.test(i)) free_bits.push_back(i);
    }
    int m = static_cast<int>(free_bits.size());
    if (m > 30) throw TooManyFreeEdgesError(std::to_string(m));

    EvalContext ctx(bb);
    std::uint64_t viol = 0;
    SubgraphMask H = forced;
    for (std::uint64_t cfg = 0; cfg < (std::uint64_t(1) << m); ++cfg) {
        for (int i = 0; i < m; ++i) H.set(free_bits[i], cfg >> i & 1);
        ctx.load(H);
        bool l = ctx.eval(left);
        ctx.load(mirror_subgraph(bb, H, shadows));
        bool r = ctx.eval(right);
        if (l != r) ++viol;
    }
    return viol;
}

std::uint64_t perm_bicond_violations(const BunkbedGraph& bb, const EdgeModel& model,
                                     const Event& left, const Event& right,
                                     const std::vector<int>& edge_perm) {
    int ne = bb.edge_count();
    if (static_cast<int>(edge_perm.size()) != ne) throw UnboundReferenceError("edge permutation size");
    std::vector<int> inv(ne);
    for (int i = 0; i < ne; ++i) inv[edge_perm[i]] = i;

    SubgraphMask supp = event_support(bb, left);
    SubgraphMask suppR = event_support(bb, right);
    for (int i = 0; i < ne; ++i)
        if (suppR.test(i)) supp.set(inv[i]);
    std::vector<int> free_bits;
    SubgraphMask forced = bb.empty_mask();
    for (int i = 0; i < ne; ++i) {
        if (model.is_forced_present(i)) forced.set(i);
        else if (model.is_free(i) && supp.test(i)) free_bits.push_back(i);
    }
    int m = static_cast<int>(free_bits.size());
    if (m > 30) throw TooManyFreeEdgesError(std::to_string(m));

    EvalContext ctx(bb);
    std::uint64_t viol = 0;
    SubgraphMask H = forced;
    SubgraphMask img(ne);
    for (std::uint64_t cfg = 0; cfg < (std::uint64_t(1) << m); ++cfg) {
        for (int i = 0; i < m; ++i) H.set(free_bits[i], cfg >> i & 1);
        for (int i = 0; i < ne; ++i) img.set(edge_perm[i], H.test(i));
        ctx.load(H);
        bool l = ctx.eval(left);
        ctx.load(img);
        bool r = ctx.eval(right);
        if (l != r) ++viol;
    }
    return viol;
}

std::vector<int> g1_reversal_edge_perm(const BunkbedGraph& bb) {
    const DiGraph& g = bb.base();
    auto img = [&](int v) { return g.at(std::to_string(10 - std::stoi(g.label(v)))); };
    std::vector<int> perm(bb.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        int e2 = g.find_edge(img(v), img(u));
        if (e2 < 0) throw UnboundReferenceError("graph is not closed under reversal");
        perm[bb.lower(e)] = bb.lower(e2);
        perm[bb.upper(e)] = bb.upper(e2);
    }
    for (int v = 0; v < g.vertex_count(); ++v) perm[bb.vertical(v)] = bb.vertical(img(v));
    return perm;
}

// ---------------------------------------------------------------------------

namespace {

Rational count_prob(std::uint64_t count, int bits) {
    return Rational(BigInt(count), BigInt(1) << bits);
}

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

Rational conditioned_gap_dp() {
    const BunkbedGraph& bb = g1_bunkbed();
    const EdgeModel& model = g1_conditioned();
    Rational pa = exact_reach_dp(bb, model, bb.parse_vertex("1-"), bb.parse_vertex("9-"));
    Rational pb = exact_reach_dp(bb, model, bb.parse_vertex("1-"), bb.parse_vertex("9+"));
    return pb - pa;
}

ClaimReport verify_claim_i(const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimReport rep;
    bool ex = opts.mode == VerifyMode::Exhaustive;
    rep.claim = ex ? "claim-i" : "claim-i (sampled)";
    G1SweepCounters c = g1_sweep(opts.mode, opts.n, opts.seed, opts.threads);
    std::string prov = ex ? "exhaustive sweep, 2^28 configurations"
                          : "sampled sweep, n=" + std::to_string(c.total) +
                                ", seed=" + std::to_string(opts.seed);

    rep.add("extra-post mirror biconditional violations", "0", std::to_string(c.violExtraPostMirror), prov,
            c.violExtraPostMirror == 0);
    rep.add("mirror biconditional A2->B2 violations", "0", std::to_string(c.violMirror2), prov,
            c.violMirror2 == 0);
    rep.add("mirror biconditional A3->B3 violations", "0", std::to_string(c.violMirror3), prov,
            c.violMirror3 == 0);
    rep.add("mirror biconditional A4->B4 violations", "0", std::to_string(c.violMirror4), prov,
            c.violMirror4 == 0);
    if (ex) {
        int unequal = 0;
        for (int s = 1; s < 64; ++s)
            if (c.cAS[s] != c.cBS[s]) ++unequal;
        rep.add("per-class counts P(A,F_S)=P(B,F_S), 63 classes", "0 unequal",
                std::to_string(unequal) + " unequal", prov, unequal == 0);
        std::uint64_t a1 = c.cA - c.cAF, b1 = c.cB - c.cBF;
        rep.add_eq("P(A1)=P(B1)", count_prob(b1, 28), count_prob(a1, 28), prov);
        rep.add_eq("P(A2)=P(B2)", count_prob(c.cB2, 28), count_prob(c.cA2, 28), prov);
        rep.add_eq("P(A3)=P(B3)", count_prob(c.cB3, 28), count_prob(c.cA3, 28), prov);
        rep.add_eq("P(A4)=P(B4)", count_prob(c.cB4, 28), count_prob(c.cA4, 28), prov);
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

ClaimReport verify_claim_ii(int threads) {
    auto t0 = std::chrono::steady_clock::now();
    const BunkbedGraph& bb = g1_bunkbed();
    const EdgeModel& model = g1_conditioned();
    auto t = g1_event_table(bb);
    Event F = t.at("F"), R = t.at("R"), Pm = t.at("P-"), Pp = t.at("P+");

    EnumerateOptions eo;
    eo.threads = threads;
    auto probs = exact_enumeration(
        bb, model,
        {F, ev_and(ev_and(Pp, R), F), ev_and(ev_and(Pm, R), F), ev_and(Pp, F), ev_and(Pm, F)},
        eo);
    Rational pF = probs[0];
    Rational ppr = probs[1] / pF, pmr = probs[2] / pF;
    Rational pp = probs[3] / pF, pm = probs[4] / pF;

    ClaimReport rep;
    rep.claim = "claim-ii";
    std::string prov = "restricted exact enumeration";
    rep.add_eq("P(F)", Rational(1, 64), pF, prov);
    rep.add_eq("P_F(P+ and R)", Rational(5, 128), ppr, prov);
    rep.add_eq("P_F(P- and R)", Rational(1, 32), pmr, prov);
    std::uint64_t viol = mirror_bicond_violations(
        bb, model, ev_and(ev_and(Pp, ev_not(R)), F), ev_and(ev_and(Pm, ev_not(R)), F),
        {bb.base().find_edge(bb.base().at("2"), bb.base().at("3")),
         bb.base().find_edge(bb.base().at("3"), bb.base().at("4")),
         bb.base().find_edge(bb.base().at("4"), bb.base().at("5"))});
    rep.add("mirror biconditional (P+,R^c,F)<->(P-,R^c,F)", "0 violations",
            std::to_string(viol) + " violations", "exhaustive over the support", viol == 0);
    rep.add("P_F(P+) > P_F(P-)", "strict", pp.str() + " vs " + pm.str(), prov, pp > pm);
    rep.add_eq("P_F(P+) - P_F(P-)", Rational(1, 128), pp - pm, prov);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

ClaimReport verify_claim_iii(int threads) {
    auto t0 = std::chrono::steady_clock::now();
    const BunkbedGraph& bb = g1_bunkbed();
    const EdgeModel& model = g1_conditioned();
    auto t = g1_event_table(bb);
    auto v = [&](const std::string& s) { return bb.parse_vertex(s); };
    Event F = t.at("F");

    std::vector<BunkbedVertex> shaded;
    for (const std::string& b : {"3", "5", "6", "7", "8", "9"}) {
        shaded.push_back(v(b + "-"));
        shaded.push_back(v(b + "+"));
    }
    auto five = [&](const char* del) {
        return ev_or(ev_reach(bb, v("5-"), v(std::string("9") + del)),
                     ev_reach(bb, v("5+"), v(std::string("9") + del)));
    };
    auto within3 = [&](const char* del) {
        return ev_reach_within(bb, shaded, v("3-"), v(std::string("9") + del));
    };
    Event sevenM_m = ev_reach(bb, v("7-"), v("9-"));
    Event sevenP_m = ev_reach(bb, v("7+"), v("9-"));
    Event e3m_m = ev_and(sevenM_m, five("-"));                       // 7-,5+- -> 9-
    Event e3m_p = ev_and(ev_reach(bb, v("7-"), v("9+")), five("+")); // 7-,5+- -> 9+
    Event e3x_m = ev_and(sevenP_m, five("-"));                       // 7+,5+- -> 9-
    Event l34 = ev_and(e3m_m, ev_not(sevenP_m));
    Event r34 = ev_and(e3x_m, ev_not(sevenM_m));

    EnumerateOptions eo;
    eo.threads = threads;
    std::vector<Event> evs = {F,
                              ev_and(t.at("Q--"), F), ev_and(t.at("Q-+"), F),
                              ev_and(t.at("Q+-"), F), ev_and(t.at("Q++"), F),
                              ev_and(within3("-"), F), ev_and(within3("+"), F),
                              ev_and(five("-"), F), ev_and(five("+"), F),
                              ev_and(e3m_m, F), ev_and(e3m_p, F),
                              ev_and(ev_and(within3("-"), five("-")), F),
                              ev_and(ev_and(within3("+"), five("+")), F),
                              ev_and(l34, F), ev_and(r34, F),
                              ev_and(e3x_m, F)};
    auto probs = exact_enumeration(bb, model, evs, eo);
    Rational pF = probs[0];
    auto pf = [&](size_t i) { return probs[i] / pF; };
    Rational qmm = pf(1), qmp = pf(2), qpm = pf(3), qpp = pf(4);
    Rational in3m = pf(5), in3p = pf(6), fv_m = pf(7), fv_p = pf(8);
    Rational e3m = pf(9), e3p = pf(10), half_m = pf(11), half_p = pf(12);
    Rational l34p = pf(13), r34p = pf(14), e3x = pf(15);

    ClaimReport rep;
    rep.claim = "claim-iii";
    std::string prov = "restricted exact enumeration";
    rep.add_eq("P_F(Q++) = P_F(Q--)", qmm, qpp, prov);
    rep.add_eq("P_F(Q+-) = P_F(Q-+)", qmp, qpm, prov);
    rep.add("P_F(Q--) > P_F(Q-+)", "strict", qmm.str() + " vs " + qmp.str(), prov, qmm > qmp);
    Rational res_m = qmm - (in3m + fv_m - Rational::half() * e3m);
    Rational res_p = qmp - (in3p + fv_p - Rational::half() * e3p);
    rep.add_eq("inclusion-exclusion residual (to 9-)", Rational::zero(), res_m, prov);
    rep.add_eq("inclusion-exclusion residual (to 9+)", Rational::zero(), res_p, prov);
    rep.add_eq("halving identity (to 9-)", Rational::half() * e3m, half_m, prov);
    rep.add_eq("halving identity (to 9+)", Rational::half() * e3p, half_p, prov);
    std::set<int> all_shadows;
    for (int e = 0; e < bb.base_edges(); ++e) all_shadows.insert(e);
    std::uint64_t v1 = mirror_bicond_violations(bb, model, ev_and(t.at("Q--"), F),
                                                ev_and(t.at("Q++"), F), all_shadows);
    std::uint64_t v2 = mirror_bicond_violations(bb, model, ev_and(t.at("Q-+"), F),
                                                ev_and(t.at("Q+-"), F), all_shadows);
    rep.add("all-edge mirror biconditional Q--<->Q++, Q-+<->Q+-", "0 violations",
            std::to_string(v1 + v2) + " violations", "exhaustive over the support", v1 + v2 == 0);
    rep.add("P_F(7-,5+- -> 9-) < P_F(7+,5+- -> 9-)", "strict",
            e3m.str() + " vs " + e3x.str(), prov, e3m < e3x);
    std::uint64_t v3 = perm_bicond_violations(bb, model, ev_and(l34, F),
                                              ev_and(t.at("P-"), F), g1_reversal_edge_perm(bb));
    std::uint64_t v4 = perm_bicond_violations(bb, model, ev_and(r34, F),
                                              ev_and(t.at("P+"), F), g1_reversal_edge_perm(bb));
    rep.add("reversal isomorphism maps the refined events onto P-/P+", "0 violations",
            std::to_string(v3 + v4) + " violations", "exhaustive over the support",
            v3 + v4 == 0);
    auto pPm = exact_enumeration(bb, model, {ev_and(t.at("P-"), F), ev_and(t.at("P+"), F)}, eo);
    rep.add_eq("P_F(refined left) = P_F(P-)", pPm[0] / pF, l34p, prov);
    rep.add_eq("P_F(refined right) = P_F(P+)", pPm[1] / pF, r34p, prov);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

ClaimReport verify_proposition(const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    ClaimReport rep;
    bool ex = opts.mode == VerifyMode::Exhaustive;
    rep.claim = ex ? "proposition" : "proposition (sampled)";
    G1SweepCounters c = g1_sweep(opts.mode, opts.n, opts.seed, opts.threads);
    std::string prov = ex ? "exhaustive sweep, 2^28 configurations"
                          : "sampled sweep, n=" + std::to_string(c.total) +
                                ", seed=" + std::to_string(opts.seed);

    rep.add("decomposition violations (A side)", "0", std::to_string(c.violDecompA), prov,
            c.violDecompA == 0);
    rep.add("decomposition violations (B side)", "0", std::to_string(c.violDecompB), prov,
            c.violDecompB == 0);

    Rational gap_dp = conditioned_gap_dp();
    rep.add("P(B) - P(A) > 0 (exact dp)", "strict positive", gap_dp.str(), "frontier dp",
            gap_dp > Rational::zero());

    if (ex) {
        // Independence of P_eps and Q_eps,delta given F.
        struct Pair { int p, q, pq; const char* name; };
        for (auto [p, q, pq, name] : {Pair{0, 0, 0, "P-,Q--"}, Pair{0, 1, 1, "P-,Q-+"},
                                      Pair{1, 2, 2, "P+,Q+-"}, Pair{1, 3, 3, "P+,Q++"}}) {
            BigInt lhs = BigInt(c.cPQF[pq]) * c.cF;
            BigInt rhs = BigInt(c.cPF[p]) * c.cQF[q];
            rep.add(std::string("independence given F: ") + name, rhs.str(), lhs.str(), prov,
                    lhs == rhs);
        }
        Rational pA = count_prob(c.cA, 28), pB = count_prob(c.cB, 28);
        Rational pF = count_prob(c.cF, 28);
        Rational dP = count_prob(c.cPF[1], 28) / pF - count_prob(c.cPF[0], 28) / pF;
        Rational dQ = count_prob(c.cQF[0], 28) / pF - count_prob(c.cQF[1], 28) / pF;
        Rational product = pF * dP * dQ;
        rep.add_eq("product formula P(B)-P(A) = P(F) dP dQ", product, pB - pA, prov);
        rep.add("P(B) > P(A)", "strict", (pB - pA).str(), prov, pB > pA);
        rep.add_eq("gap agrees with exact dp", gap_dp, pB - pA, prov + " vs frontier dp");
        // P(A) three ways.
        Rational a_parts = count_prob(c.cA - c.cAF, 28) + count_prob(c.cA2, 28) +
                           count_prob(c.cA3, 28) + count_prob(c.cA4, 28) +
                           count_prob(c.cPQF[0], 28) + count_prob(c.cPQF[2], 28);
        rep.add_eq("P(A) = sum of its six parts", pA, a_parts, prov);
        Rational a_prod = count_prob(c.cA - c.cAF, 28) + count_prob(c.cA2, 28) +
                          count_prob(c.cA3, 28) + count_prob(c.cA4, 28) +
                          pF * ((count_prob(c.cPF[0], 28) / pF) * (count_prob(c.cQF[0], 28) / pF) +
                                (count_prob(c.cPF[1], 28) / pF) * (count_prob(c.cQF[2], 28) / pF));
        rep.add_eq("P(A) via conditional products", pA, a_prod, prov);
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

} // namespace bunkbed
