#include "bunkbed/theorem.hpp"

#include "bunkbed/enumerate.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/g1_suite.hpp"
#include "bunkbed/graph.hpp"
#include "bunkbed/reach_dp.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace bunkbed {

DiGraph build_g2k(int k) {
    if (k < 1) throw Error("gadget needs k >= 1");
    return blowup(build_g1(), {"2", "5", "8"}, k);
}

Rational gadget_formula(int k) {
    return Rational::one() - pow(Rational(31, 32), static_cast<unsigned>(k));
}

Event gadget_event(const BunkbedGraph& bb, int k, const std::string& i) {
    const DiGraph& g = bb.base();
    int va = g.at(i + "a"), vb = g.at(i + "b");
    Event c = ev_not(ev_true()); // empty union
    for (int j = 1; j <= k; ++j) {
        int vj = g.at(i + "_" + std::to_string(j));
        int in = g.find_edge(va, vj), out = g.find_edge(vj, vb);
        if (in < 0 || out < 0) throw UnboundReferenceError("gadget strand edges");
        Event strand = ev_and(
            ev_and(ev_edge(bb, bb.lower(in)), ev_edge(bb, bb.lower(out))),
            ev_and(ev_and(ev_edge(bb, bb.upper(in)), ev_edge(bb, bb.upper(out))),
                   ev_edge(bb, bb.vertical(vj))));
        c = j == 1 ? strand : ev_or(c, strand);
    }
    return c;
}

Rational gadget_event_probability(int k, const std::string& i, bool exact) {
    if (!exact) return gadget_formula(k);
    BunkbedGraph bb(build_g2k(k));
    EdgeModel model = uniform_model(bb);
    return exact_enumeration_one(bb, model, gadget_event(bb, k, i));
}

std::pair<Rational, Rational> theorem_gap(int k) {
    BunkbedGraph bb(build_g2k(k));
    EdgeModel model = uniform_model(bb);
    return {exact_reach_dp(bb, model, bb.parse_vertex("1-"), bb.parse_vertex("9-")),
            exact_reach_dp(bb, model, bb.parse_vertex("1-"), bb.parse_vertex("9+"))};
}

std::pair<double, double> theorem_gap_double(int k) {
    BunkbedGraph bb(build_g2k(k));
    EdgeModel model = uniform_model(bb);
    return {reach_dp_double(bb, model, bb.parse_vertex("1-"), bb.parse_vertex("9-")),
            reach_dp_double(bb, model, bb.parse_vertex("1-"), bb.parse_vertex("9+"))};
}

TheoremCertificate certify_theorem(int k_max) {
    if (k_max < 1) throw Error("certify_theorem needs k_max >= 1");
    TheoremCertificate cert;
    cert.g = conditioned_gap_dp();

    // Smallest k whose crossbar bound alone forces a positive gap:
    // P(B_k) - P(A_k) >= P(C) * g - P(C^c) with P(C) = (1 - (31/32)^k)^3.
    auto pcc_at = [](int k) {
        Rational pc = pow(Rational::one() - pow(Rational(31, 32), static_cast<unsigned>(k)), 3);
        return Rational::one() - pc;
    };
    int k = 1;
    while (true) {
        Rational pcc = pcc_at(k);
        if (pcc < (Rational::one() - pcc) * cert.g) break;
        ++k;
    }
    cert.k_cert = k;
    cert.pcc = pcc_at(k);
    cert.k_cert_exceeds_kmax = k > k_max;

    std::tie(cert.pa, cert.pb) = theorem_gap(cert.k_cert);
    cert.pass = cert.pb > cert.pa;

    int sweep_to = std::min(k_max, cert.k_cert);
    for (int j = 1; j <= sweep_to; ++j) {
        auto [pa, pb] = theorem_gap(j);
        cert.sweep.push_back({j, pa, pb});
        if (cert.smallest_positive_k < 0 && pb > pa) cert.smallest_positive_k = j;
    }
    return cert;
}

} // namespace bunkbed
