// Acceptance checks, one line per criterion. Invoke with a group name:
//   fast     criteria 1, 3, 5, 7 (single-edge part), 8, 9
//   sweep    criteria 2, 4 and the exhaustive half of 7
//   theorem  criterion 6
// Exits non-zero when any criterion in the group fails.

#include "bunkbed/enumerate.hpp"
#include "bunkbed/g1_suite.hpp"
#include "bunkbed/graph.hpp"
#include "bunkbed/monte_carlo.hpp"
#include "bunkbed/reach_dp.hpp"
#include "bunkbed/rng.hpp"
#include "bunkbed/theorem.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace bunkbed;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::cout << "criterion " << criterion << ": " << (pass ? "pass" : "FAIL") << " - "
              << what << std::endl;
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criterion 1: exact front-path constants -------------------------------

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    ClaimReport rep = verify_claim_ii();
    bool has_5_128 = false, has_1_32 = false;
    for (const auto& c : rep.checks) {
        if (c.computed == "5/128" && c.pass) has_5_128 = true;
        if (c.computed == "1/32" && c.pass) has_1_32 = true;
    }
    std::ostringstream s;
    s << "front-path constants 5/128 and 1/32 exact (" << seconds_since(t0) << " s)";
    report(1, rep.pass() && has_5_128 && has_1_32, s.str());
}

// --- criterion 2: claim (i), exhaustive and sampled ------------------------

void criterion_2() {
    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions ex;
    ex.mode = VerifyMode::Exhaustive;
    ClaimReport full = verify_claim_i(ex);
    double t_full = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    VerifyOptions sampled;
    sampled.n = 1'000'000;
    ClaimReport quick = verify_claim_i(sampled);
    double t_quick = seconds_since(t0);

    std::ostringstream s;
    s << "P(A_i)=P(B_i) for i=1..4 over all 2^28 configurations (" << t_full
      << " s) and zero sampled violations at n=10^6 (" << t_quick << " s)";
    report(2, full.pass() && quick.pass() && t_quick <= 60.0, s.str());
}

// --- criterion 3: claim (iii) ----------------------------------------------

void criterion_3() {
    ClaimReport rep = verify_claim_iii();
    report(3, rep.pass(),
           "shaded-region equalities, strict inequality and inclusion-exclusion residual");
}

// --- criterion 4: proposition, plus Monte Carlo confirmation ---------------

void criterion_4() {
    VerifyOptions ex;
    ex.mode = VerifyMode::Exhaustive;
    ClaimReport rep = verify_proposition(ex);

    const BunkbedGraph& bb = g1_bunkbed();
    auto t = g1_event_table(bb);
    Event a = t.at("A"), b = t.at("B");
    std::uint64_t n = 10'000'000;
    auto est = monte_carlo(bb, g1_conditioned(), {a, b, ev_and(a, b)}, n, 1);
    double pa = est[0].estimate, pb = est[1].estimate, pab = est[2].estimate;
    double diff = pb - pa;
    double var = pa + pb - 2 * pab - diff * diff;
    double half = z_score(0.99) * std::sqrt(var / static_cast<double>(n));
    double exact_gap = conditioned_gap_dp().approx();
    bool in_ci = exact_gap >= diff - half && exact_gap <= diff + half;

    std::ostringstream s;
    s << "product formula and strict gap exact; exact gap " << exact_gap
      << " inside 99% CI of MC difference " << diff << " +- " << half << " at n=10^7";
    report(4, rep.pass() && in_ci, s.str());
}

// --- criterion 5: gadget crossbar formula ----------------------------------

void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int k = 1; k <= 4; ++k)
        ok = ok && gadget_event_probability(k, "5", true) == gadget_formula(k);
    // Spot check the other two gadgets at k=2.
    ok = ok && gadget_event_probability(2, "2", true) == gadget_formula(2);
    ok = ok && gadget_event_probability(2, "8", true) == gadget_formula(2);
    std::ostringstream s;
    double dt = seconds_since(t0);
    s << "crossbar probability equals 1-(31/32)^k for k=1..4 by enumeration (" << dt
      << " s)";
    report(5, ok && dt <= 60.0, s.str());
}

// --- criterion 6: the theorem at explicit k --------------------------------

void criterion_6() {
    auto t0 = std::chrono::steady_clock::now();
    TheoremCertificate cert = certify_theorem(1000);
    double t_cert = seconds_since(t0);

    const BunkbedGraph& bb = g1_bunkbed();
    Rational pa_limit =
        exact_reach_dp(bb, g1_conditioned(), bb.parse_vertex("1-"), bb.parse_vertex("9-"));
    auto pcc_at = [](int k) {
        return Rational::one() -
               pow(Rational::one() - pow(Rational(31, 32), static_cast<unsigned>(k)), 3);
    };
    bool bounds_ok = true;
    auto check_row = [&](int k, const Rational& pa, const Rational& pb) {
        Rational pcc = pcc_at(k);
        bounds_ok = bounds_ok && abs(pa - pa_limit) <= pcc;
        bounds_ok =
            bounds_ok && abs((pb - pa) - (Rational::one() - pcc) * cert.g) <= pcc;
    };
    for (int k = 1; k <= cert.k_cert; k *= 2) {
        if (k <= static_cast<int>(cert.sweep.size()))
            check_row(k, cert.sweep[k - 1].pa, cert.sweep[k - 1].pb);
    }
    check_row(cert.k_cert, cert.pa, cert.pb);

    // Double-precision sweep all the way to k = 1000.
    t0 = std::chrono::steady_clock::now();
    double tail_gap = 0;
    for (int k = 1; k <= 1000; ++k) {
        auto [da, db] = theorem_gap_double(k);
        if (k == 1000) tail_gap = db - da;
    }
    double t_sweep = seconds_since(t0);
    bool tail_ok = std::abs(tail_gap - cert.g.approx()) <= pcc_at(1000).approx() + 1e-9;

    std::ostringstream s;
    s << "exact gap positive at certified k=" << cert.k_cert << " (" << t_cert
      << " s); crossbar bounds hold at powers of two; double dp sweep to k=1000 ("
      << t_sweep << " s)";
    report(6, cert.pass && bounds_ok && tail_ok && t_sweep <= 600.0, s.str());
}

// --- criterion 7: engine cross-validation ----------------------------------

void criterion_7_fast() {
    BunkbedGraph bb(build_digraph({"a", "b"}, {{"a", "b"}}));
    EdgeModel model = uniform_model(bb);
    bool ok =
        exact_enumeration_one(bb, model, parse_event(bb, "reach(a-,b+)")) ==
            Rational(7, 16) &&
        exact_enumeration_one(bb, model, parse_event(bb, "reach(a-,b-)")) ==
            Rational(9, 16) &&
        exact_reach_dp(bb, model, bb.parse_vertex("a-"), bb.parse_vertex("b+")) ==
            Rational(7, 16) &&
        exact_reach_dp(bb, model, bb.parse_vertex("a-"), bb.parse_vertex("b-")) ==
            Rational(9, 16);
    report(7, ok, "single-edge bunkbed: enumeration and dp both give 7/16 and 9/16");
}

void criterion_7_exhaustive() {
    const BunkbedGraph& bb = g1_bunkbed();
    bool ok = true;
    std::ostringstream s;
    s << "enumeration vs dp on the base graph:";
    for (bool conditioned : {false, true}) {
        EdgeModel model =
            conditioned ? g1_conditioned() : uniform_model(bb);
        EnumerateOptions eo;
        eo.cap = 31; // the uniform model leaves every edge free
        auto t0 = std::chrono::steady_clock::now();
        auto probs = exact_enumeration(
            bb, model,
            {parse_event(bb, "reach(1-,9-)"), parse_event(bb, "reach(1-,9+)")}, eo);
        Rational dpa =
            exact_reach_dp(bb, model, bb.parse_vertex("1-"), bb.parse_vertex("9-"));
        Rational dpb =
            exact_reach_dp(bb, model, bb.parse_vertex("1-"), bb.parse_vertex("9+"));
        ok = ok && probs[0] == dpa && probs[1] == dpb;
        s << (conditioned ? " conditioned" : " uniform") << " (" << seconds_since(t0)
          << " s)";
    }
    report(7, ok, "exact agreement on P(1- to 9-+), both models;" + s.str());
}

// --- criterion 8: property suites ------------------------------------------

void criterion_8() {
    const BunkbedGraph& bb = g1_bunkbed();
    bool ok = true;

    // Mirror involution, posts and size preservation on random (H, F).
    SplitMix64 rng(42);
    for (int it = 0; it < 100'000 && ok; ++it) {
        std::uint64_t bits = rng.next();
        SubgraphMask h = bb.empty_mask();
        for (int e = 0; e < bb.edge_count(); ++e)
            if (bits >> e & 1) h.set(e);
        std::set<int> f;
        std::uint64_t fbits = rng.next();
        for (int e = 0; e < bb.base_edges(); ++e)
            if (fbits >> e & 1) f.insert(e);
        SubgraphMask m = mirror_subgraph(bb, h, f);
        ok = ok && mirror_subgraph(bb, m, f) == h && posts(bb, m) == posts(bb, h) &&
             m.count() == h.count();
    }
    bool involution_ok = ok;

    // Measure invariance: under uniform 1/2 the mirrored configuration is
    // equally likely, so any event has the same count of satisfying
    // configurations as its mirror pullback. Random small acyclic bases.
    ok = true;
    SplitMix64 rng2(7);
    for (int inst = 0; inst < 1'000 && ok; ++inst) {
        int nv = 3 + static_cast<int>(rng2.next() % 2);
        std::vector<std::string> vs;
        for (int v = 0; v < nv; ++v) vs.push_back(std::to_string(v));
        std::vector<std::pair<std::string, std::string>> es;
        for (int u = 0; u < nv; ++u)
            for (int v = u + 1; v < nv; ++v)
                if (rng2.next() & 1) es.emplace_back(vs[u], vs[v]);
        if (es.size() > 4) es.resize(4);
        BunkbedGraph g(build_digraph(vs, es));
        std::set<int> f;
        for (int e = 0; e < g.base_edges(); ++e)
            if (rng2.next() & 1) f.insert(e);
        int x = static_cast<int>(rng2.next() % (2 * nv));
        int y = static_cast<int>(rng2.next() % (2 * nv));
        Event ev = ev_reach(g, g.vertex_of(x), g.vertex_of(y));
        EvalContext ctx(g);
        int ne = g.edge_count();
        std::uint64_t direct = 0, mirrored = 0;
        SubgraphMask h(ne);
        for (std::uint64_t cfg = 0; cfg < (std::uint64_t(1) << ne); ++cfg) {
            for (int e = 0; e < ne; ++e) h.set(e, cfg >> e & 1);
            ctx.load(h);
            if (ctx.eval(ev)) ++direct;
            ctx.load(mirror_subgraph(g, h, f));
            if (ctx.eval(ev)) ++mirrored;
        }
        ok = ok && direct == mirrored;
    }
    bool invariance_ok = ok;

    // Monte Carlo calibration on a known value: coverage of the 99% CI.
    BunkbedGraph single(build_digraph({"a", "b"}, {{"a", "b"}}));
    EdgeModel model = uniform_model(single);
    Event stay = parse_event(single, "reach(a-,b-)");
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto est = monte_carlo(single, model, {stay}, 10'000, seed);
        if (est[0].ci_low <= 9.0 / 16 && 9.0 / 16 <= est[0].ci_high) ++covered;
    }
    bool calibration_ok = covered >= 95;

    // Reachability corner cases.
    bool reach_ok =
        eval_event(bb, parse_event(bb, "reach(6-,6-)"), bb.empty_mask()) &&
        !eval_event(bb, parse_event(bb, "reach(6-,6+)"), bb.empty_mask());
    SubgraphMask vert = bb.empty_mask();
    vert.set(bb.vertical(bb.base().at("6")));
    reach_ok = reach_ok && eval_event(bb, parse_event(bb, "reach(6+,6-)"), vert);

    std::ostringstream s;
    s << "mirror involution on 10^5 random pairs, measure invariance on 10^3 random "
         "instances, MC coverage "
      << covered << "/100, reachability corner cases";
    report(8, involution_ok && invariance_ok && calibration_ok && reach_ok, s.str());
}

// --- criterion 9: byte-identical CLI output --------------------------------

std::string run_cli(const std::string& args, const std::string& outfile) {
    std::string cmd = std::string(BUNKBED_CLI_PATH) + " " + args + " > " + outfile +
                      " 2>/dev/null";
    if (std::system(cmd.c_str()) == -1) return "<spawn failure>";
    std::ifstream f(outfile, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void criterion_9() {
    struct Variant {
        std::string a, b;
    };
    std::vector<Variant> variants = {
        {"verify claim-ii --format json", "verify claim-ii --format json --threads 4"},
        {"verify claim-iii --format json --threads 2",
         "verify claim-iii --format json --threads 4"},
        {"verify claim-i --format json --n 200000 --seed 9 --threads 1",
         "verify claim-i --format json --n 200000 --seed 9 --threads 4"},
        {"verify proposition --format json --n 200000 --seed 9 --threads 1",
         "verify proposition --format json --n 200000 --seed 9 --threads 4"},
        {"mc --graph g1 --event \"reach(1-,9+)\" --n 100000 --seed 3 --threads 1 --format json",
         "mc --graph g1 --event \"reach(1-,9+)\" --n 100000 --seed 3 --threads 4 --format json"},
    };
    bool ok = true;
    for (const auto& v : variants) {
        std::string x1 = run_cli(v.a, "/tmp/bunkbed_acc_a.json");
        std::string x2 = run_cli(v.a, "/tmp/bunkbed_acc_b.json"); // repeat run
        std::string x3 = run_cli(v.b, "/tmp/bunkbed_acc_c.json"); // thread variant
        ok = ok && !x1.empty() && x1 == x2 && x1 == x3;
    }
    report(9, ok, "repeated runs and thread-count variants give byte-identical JSON");
}

} // namespace

int main(int argc, char** argv) {
    std::string group = argc > 1 ? argv[1] : "fast";
    if (group == "fast") {
        criterion_1();
        criterion_3();
        criterion_5();
        criterion_7_fast();
        criterion_8();
        criterion_9();
    } else if (group == "sweep") {
        criterion_2();
        criterion_4();
        criterion_7_exhaustive();
    } else if (group == "theorem") {
        criterion_6();
    } else {
        std::cerr << "unknown group: " << group << "\n";
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
