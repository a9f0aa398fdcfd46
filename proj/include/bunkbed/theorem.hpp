#ifndef BUNKBED_THEOREM_HPP
#define BUNKBED_THEOREM_HPP

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/event.hpp"
#include "bunkbed/rational.hpp"

#include <string>
#include <vector>

namespace bunkbed {

/// Base graph with each of the vertices {2,5,8} of G1 replaced by the
/// k-strand gadget.
DiGraph build_g2k(int k);

/// 1 - (31/32)^k: probability that some strand of a k-strand gadget has all
/// five of its bunkbed edges (crossbar) present under uniform 1/2.
Rational gadget_formula(int k);

/// The crossbar event C_i on the bunkbed of G2^k: some strand j of the
/// gadget at base vertex i in {2,5,8} has its vertical and all four
/// horizontal neighbours present.
Event gadget_event(const BunkbedGraph& bb, int k, const std::string& i);

/// P(C_i) under uniform 1/2. With exact=true the value is computed by
/// enumeration over the 5k relevant edges (k <= 6, else TooManyFreeEdges);
/// otherwise the closed form is returned.
Rational gadget_event_probability(int k, const std::string& i, bool exact = true);

/// Exact DP values (P(1- -> 9-), P(1- -> 9+)) on the bunkbed of G2^k under
/// uniform 1/2.
std::pair<Rational, Rational> theorem_gap(int k);
/// Same in double precision.
std::pair<double, double> theorem_gap_double(int k);

struct TheoremSweepRow {
    int k = 0;
    Rational pa, pb;
};

struct TheoremCertificate {
    Rational g;              // conditioned gap P(B) - P(A) on G1
    int k_cert = 0;          // smallest k with P(C^c) < (1 - P(C^c)) * g
    Rational pcc;            // P(C^c) = 1 - (1 - (31/32)^k)^3 at k_cert
    Rational pa, pb;         // exact DP values at k_cert
    bool k_cert_exceeds_kmax = false;
    std::vector<TheoremSweepRow> sweep;   // k = 1..min(k_max, k_cert)
    int smallest_positive_k = -1;         // within the sweep, -1 if none
    bool pass = false;                    // pb - pa > 0 at k_cert

    Rational gap() const { return pb - pa; }
};

/// Certify the strict inequality of the main theorem: find the smallest k
/// whose crossbar bound already forces a positive gap, confirm the gap
/// exactly at that k, and sweep the smaller sizes.
TheoremCertificate certify_theorem(int k_max);

} // namespace bunkbed

#endif
