// Command-line front end: graph export, probability computations with the
// three engines, named verifications, and the theorem certificate.

#include "bunkbed/enumerate.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/event.hpp"
#include "bunkbed/g1_suite.hpp"
#include "bunkbed/graph_io.hpp"
#include "bunkbed/model.hpp"
#include "bunkbed/monte_carlo.hpp"
#include "bunkbed/reach_dp.hpp"
#include "bunkbed/report.hpp"
#include "bunkbed/theorem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bunkbed;
using nlohmann::json;

namespace {

struct Options {
    std::string graph = "g1"; // g1 | g2k | file path
    int k = 1;
    std::string model = "uniform";
    std::vector<std::string> events;
    std::string format = "human";
    std::string mode = "sampled";
    std::uint64_t n = 1'000'000;
    std::uint64_t seed = 0;
    int threads = 1;
    int kmax = 8;
    std::string out;
    bool timing = false;
};

DiGraph load_base_graph(const Options& o) {
    if (o.graph == "g1") return build_g1();
    if (o.graph == "g2k") return build_g2k(o.k);
    return read_graph_file(o.graph);
}

EdgeModel parse_model(const BunkbedGraph& bb, const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw ParseError("empty model spec");
    if (parts[0] == "uniform") {
        if (parts.size() > 2) throw ParseError("model spec: " + spec);
        Rational p = parts.size() == 2 ? Rational::parse(parts[1]) : Rational::half();
        return uniform_model(bb, p);
    }
    if (parts[0] == "conditioned") {
        if (parts.size() < 2 || parts.size() > 3) throw ParseError("model spec: " + spec);
        std::set<std::string> T;
        std::stringstream ts(parts[1]);
        std::string v;
        while (std::getline(ts, v, ',')) T.insert(v);
        Rational p = parts.size() == 3 ? Rational::parse(parts[2]) : Rational::half();
        return conditioned_model(bb, T, p);
    }
    throw ParseError("unknown model: " + parts[0]);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + o.out);
    f << text;
}

json value_json(const Rational& r) { return to_json(r); }

int run_graph(const Options& o) {
    DiGraph g = load_base_graph(o);
    std::ostringstream s;
    write_graph(s, g);
    emit(o, s.str());
    return 0;
}

int run_exact(const Options& o) {
    if (o.events.empty()) throw ParseError("exact needs at least one --event");
    BunkbedGraph bb(load_base_graph(o));
    EdgeModel model = parse_model(bb, o.model);
    std::vector<Event> evs;
    for (const auto& e : o.events) evs.push_back(parse_event(bb, e));
    EnumerateOptions eo;
    eo.threads = o.threads;
    std::vector<Rational> probs = exact_enumeration(bb, model, evs, eo);

    if (o.format == "json") {
        json results = json::array();
        for (size_t i = 0; i < evs.size(); ++i)
            results.push_back({{"event", o.events[i]}, {"value", value_json(probs[i])}});
        emit(o, json{{"command", "exact"}, {"results", results}}.dump(2) + "\n");
    } else if (o.format == "human") {
        std::ostringstream s;
        for (size_t i = 0; i < evs.size(); ++i)
            s << o.events[i] << " = " << probs[i].str() << " (" << probs[i].approx() << ")\n";
        emit(o, s.str());
    } else {
        throw CLI::ValidationError("--format", "exact supports human or json");
    }
    return 0;
}

int run_dp(const Options& o) {
    if (o.events.size() != 1) throw ParseError("dp needs exactly one --event");
    BunkbedGraph bb(load_base_graph(o));
    EdgeModel model = parse_model(bb, o.model);
    Event ev = parse_event(bb, o.events[0]);
    if (ev.node().op != Event::Op::Reach)
        throw ParseError("dp accepts a single reach(x,y) event");
    BunkbedVertex src = bb.vertex_of(ev.node().x), dst = bb.vertex_of(ev.node().y);
    Rational p = exact_reach_dp(bb, model, src, dst);

    if (o.format == "json") {
        emit(o, json{{"command", "dp"},
                     {"event", o.events[0]},
                     {"value", value_json(p)}}
                    .dump(2) +
                "\n");
    } else if (o.format == "human") {
        std::ostringstream s;
        s << o.events[0] << " = " << p.str() << " (" << p.approx() << ")\n";
        emit(o, s.str());
    } else {
        throw CLI::ValidationError("--format", "dp supports human or json");
    }
    return 0;
}

int run_mc(const Options& o) {
    if (o.events.empty()) throw ParseError("mc needs at least one --event");
    if (o.n < 1) throw ParseError("mc needs --n >= 1");
    BunkbedGraph bb(load_base_graph(o));
    EdgeModel model = parse_model(bb, o.model);
    std::vector<Event> evs;
    for (const auto& e : o.events) evs.push_back(parse_event(bb, e));
    MCOptions mo;
    mo.threads = o.threads;
    std::vector<MCEstimate> est = monte_carlo(bb, model, evs, o.n, o.seed, mo);

    if (o.format == "json") {
        json results = json::array();
        for (size_t i = 0; i < evs.size(); ++i)
            results.push_back({{"event", o.events[i]}, {"estimate", to_json(est[i])}});
        emit(o, json{{"command", "mc"}, {"results", results}}.dump(2) + "\n");
    } else if (o.format == "human") {
        std::ostringstream s;
        for (size_t i = 0; i < evs.size(); ++i)
            s << o.events[i] << " ~ " << est[i].estimate << "  [" << est[i].ci_low << ", "
              << est[i].ci_high << "]  (n=" << est[i].n << ", seed=" << est[i].seed << ")\n";
        emit(o, s.str());
    } else {
        throw CLI::ValidationError("--format", "mc supports human or json");
    }
    return 0;
}

int run_verify(const Options& o, const std::string& which) {
    VerifyOptions vo;
    vo.mode = o.mode == "exhaustive" ? VerifyMode::Exhaustive : VerifyMode::Sampled;
    if (o.mode != "exhaustive" && o.mode != "sampled")
        throw CLI::ValidationError("--mode", "must be exhaustive or sampled");
    vo.n = o.n;
    vo.seed = o.seed;
    vo.threads = o.threads;

    ClaimReport rep;
    if (which == "claim-i") rep = verify_claim_i(vo);
    else if (which == "claim-ii") rep = verify_claim_ii(o.threads);
    else if (which == "claim-iii") rep = verify_claim_iii(o.threads);
    else rep = verify_proposition(vo);

    if (o.format == "json")
        emit(o, to_json(rep, o.timing).dump(2) + "\n");
    else if (o.format == "human")
        emit(o, format_report(rep, o.timing));
    else
        throw CLI::ValidationError("--format", "verify supports human or json");
    return rep.pass() ? 0 : 1;
}

json certificate_json(const TheoremCertificate& c) {
    json sweep = json::array();
    for (const auto& row : c.sweep)
        sweep.push_back({{"k", row.k},
                         {"pa", value_json(row.pa)},
                         {"pb", value_json(row.pb)},
                         {"gap", value_json(row.pb - row.pa)}});
    return {{"certificate",
             {{"g", value_json(c.g)},
              {"k_cert", c.k_cert},
              {"pcc", value_json(c.pcc)},
              {"pa", value_json(c.pa)},
              {"pb", value_json(c.pb)},
              {"gap", value_json(c.gap())},
              {"smallest_positive_k", c.smallest_positive_k},
              {"k_cert_exceeds_kmax", c.k_cert_exceeds_kmax},
              {"pass", c.pass}}},
            {"sweep", sweep}};
}

int run_theorem(const Options& o) {
    if (o.kmax < 1) throw CLI::ValidationError("--kmax", "must be >= 1");
    TheoremCertificate cert = certify_theorem(o.kmax);

    if (o.format == "json") {
        emit(o, certificate_json(cert).dump(2) + "\n");
    } else if (o.format == "csv") {
        std::ostringstream s;
        s << "k,pa,pb,gap,pa_float,pb_float,gap_float\n";
        auto row = [&](int k, const Rational& pa, const Rational& pb) {
            Rational gap = pb - pa;
            s << k << "," << pa.str() << "," << pb.str() << "," << gap.str() << ","
              << pa.approx() << "," << pb.approx() << "," << gap.approx() << "\n";
        };
        for (const auto& r : cert.sweep) row(r.k, r.pa, r.pb);
        if (cert.sweep.empty() || cert.sweep.back().k != cert.k_cert)
            row(cert.k_cert, cert.pa, cert.pb);
        emit(o, s.str());
    } else if (o.format == "human") {
        std::ostringstream s;
        s << "conditioned gap g = " << cert.g.str() << " (" << cert.g.approx() << ")\n"
          << "certified k = " << cert.k_cert << "  (crossbar complement "
          << cert.pcc.approx() << ")\n";
        if (cert.k_cert_exceeds_kmax)
            s << "note: certified k exceeds --kmax " << o.kmax << "\n";
        s << "at k = " << cert.k_cert << ": P(A_k) = " << cert.pa.approx()
          << ", P(B_k) = " << cert.pb.approx() << "\n"
          << "gap = " << cert.gap().approx() << " (exact rational, "
          << (cert.gap() > Rational::zero() ? "positive" : "not positive") << ")\n"
          << "smallest k with positive gap in sweep: " << cert.smallest_positive_k << "\n"
          << (cert.pass ? "RESULT: pass" : "RESULT: FAIL") << "\n";
        emit(o, s.str());
    } else {
        throw CLI::ValidationError("--format", "theorem supports human, json or csv");
    }
    return cert.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact and Monte Carlo verification of directed bunkbed percolation"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_engine_opts) {
        cmd->add_option("--graph", o.graph, "g1, g2k or a graph file path");
        cmd->add_option("--k", o.k, "gadget size for --graph g2k");
        cmd->add_option("--out", o.out, "write output to a file instead of stdout");
        if (with_engine_opts) {
            cmd->add_option("--model", o.model,
                            "uniform[:p] or conditioned:v1,v2,...[:p], p a rational");
            cmd->add_option("--event", o.events, "event expression (repeatable)");
            cmd->add_option("--format", o.format, "human or json");
            cmd->add_option("--threads", o.threads, "worker threads");
        }
    };

    CLI::App* graph_cmd = app.add_subcommand("graph", "emit a graph file");
    add_common(graph_cmd, false);

    CLI::App* exact_cmd = app.add_subcommand("exact", "exact enumeration probabilities");
    add_common(exact_cmd, true);

    CLI::App* dp_cmd = app.add_subcommand("dp", "exact reachability probability by dp");
    add_common(dp_cmd, true);

    CLI::App* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimates");
    add_common(mc_cmd, true);
    mc_cmd->add_option("--n", o.n, "number of samples");
    mc_cmd->add_option("--seed", o.seed, "random seed");

    CLI::App* verify_cmd = app.add_subcommand("verify", "named verifications");
    verify_cmd->require_subcommand(1);
    std::vector<CLI::App*> verify_subs;
    for (const char* name : {"claim-i", "claim-ii", "claim-iii", "proposition"}) {
        CLI::App* sub = verify_cmd->add_subcommand(name);
        sub->add_option("--mode", o.mode, "exhaustive or sampled");
        sub->add_option("--n", o.n, "samples in sampled mode");
        sub->add_option("--seed", o.seed, "random seed in sampled mode");
        sub->add_option("--threads", o.threads, "worker threads");
        sub->add_option("--format", o.format, "human or json");
        sub->add_option("--out", o.out, "write output to a file instead of stdout");
        sub->add_flag("--timing", o.timing, "include elapsed time in output");
        verify_subs.push_back(sub);
    }

    CLI::App* theorem_cmd = app.add_subcommand("theorem", "theorem certificate and sweep");
    theorem_cmd->add_option("--kmax", o.kmax, "sweep gadget sizes 1..min(kmax, k_cert)");
    theorem_cmd->add_option("--format", o.format, "human, json or csv");
    theorem_cmd->add_option("--out", o.out, "write output to a file instead of stdout");
    theorem_cmd->add_flag("--timing", o.timing, "include elapsed time in output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(graph_cmd)) return run_graph(o);
        if (app.got_subcommand(exact_cmd)) return run_exact(o);
        if (app.got_subcommand(dp_cmd)) return run_dp(o);
        if (app.got_subcommand(mc_cmd)) return run_mc(o);
        if (app.got_subcommand(theorem_cmd)) return run_theorem(o);
        if (app.got_subcommand(verify_cmd)) {
            const char* names[] = {"claim-i", "claim-ii", "claim-iii", "proposition"};
            for (size_t i = 0; i < verify_subs.size(); ++i)
                if (verify_cmd->got_subcommand(verify_subs[i])) return run_verify(o, names[i]);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bunkbed::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
