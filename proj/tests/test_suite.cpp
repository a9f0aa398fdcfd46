#include <doctest.h>

#include "bunkbed/enumerate.hpp"
#include "bunkbed/errors.hpp"
#include "bunkbed/g1_suite.hpp"
#include "bunkbed/theorem.hpp"

using namespace bunkbed;

TEST_CASE("the event table names the decomposition") {
    const BunkbedGraph& bb = g1_bunkbed();
    auto t = g1_event_table(bb);
    for (const char* key : {"A", "B", "F", "A1", "A2", "A3", "A4", "B1", "B2", "B3", "B4",
                            "P-", "P+", "Q--", "Q-+", "Q+-", "Q++", "R"})
        CHECK(t.count(key) == 1);

    // Six absent free verticals: P(F) = 1/64 in the conditioned model.
    CHECK(exact_enumeration_one(bb, g1_conditioned(), t.at("F")) == Rational(1, 64));
}

TEST_CASE("named verifications pass") {
    VerifyOptions quick;
    quick.n = 200'000;
    CHECK(verify_claim_i(quick).pass());
    CHECK(verify_claim_ii().pass());
    CHECK(verify_claim_iii().pass());
    CHECK(verify_proposition(quick).pass());
}

TEST_CASE("sweep counters do not depend on the thread count") {
    G1SweepCounters a = g1_sweep(VerifyMode::Sampled, 100'000, 5, 1);
    G1SweepCounters b = g1_sweep(VerifyMode::Sampled, 100'000, 5, 4);
    CHECK(a.total == b.total);
    CHECK(a.cA == b.cA);
    CHECK(a.cB == b.cB);
    CHECK(a.cF == b.cF);
    CHECK(a.cQF[0] == b.cQF[0]);
}

TEST_CASE("the conditioned gap is a positive dyadic rational") {
    Rational g = conditioned_gap_dp();
    CHECK(g > Rational::zero());
    // The denominator divides 2^28: 28 free half-probability edges.
    CHECK((BigInt(1) << 28) % g.den() == 0);
}

TEST_CASE("gadget crossbar probability matches the closed form") {
    CHECK(gadget_formula(1) == Rational(1, 32));
    CHECK(gadget_formula(2) == Rational(63, 1024));
    for (const char* i : {"2", "5", "8"})
        CHECK(gadget_event_probability(2, i, true) == gadget_formula(2));
    CHECK(gadget_event_probability(10, "5", false) == gadget_formula(10));
    CHECK_THROWS_AS(gadget_event_probability(7, "5", true), TooManyFreeEdgesError);
}

TEST_CASE("theorem gap engines agree") {
    auto [pa, pb] = theorem_gap(2);
    auto [da, db] = theorem_gap_double(2);
    CHECK(pa.approx() == doctest::Approx(da).epsilon(1e-12));
    CHECK(pb.approx() == doctest::Approx(db).epsilon(1e-12));
}

TEST_CASE("certificate structure at a small sweep bound") {
    TheoremCertificate cert = certify_theorem(3);
    CHECK(cert.pass);
    CHECK(cert.g == conditioned_gap_dp());
    CHECK(cert.k_cert_exceeds_kmax); // k_cert is far beyond 3
    CHECK(cert.sweep.size() == 3);
    // The certificate inequality holds at k_cert by construction.
    CHECK(cert.pcc < (Rational::one() - cert.pcc) * cert.g);
    CHECK(cert.pb > cert.pa);
}
