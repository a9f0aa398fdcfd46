#ifndef BUNKBED_G1_SUITE_HPP
#define BUNKBED_G1_SUITE_HPP

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/event.hpp"
#include "bunkbed/model.hpp"
#include "bunkbed/report.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace bunkbed {

/// Bunkbed graph of the 9-vertex base graph.
const BunkbedGraph& g1_bunkbed();
/// The conditioned model with forced posts at {2,5,8}.
const EdgeModel& g1_conditioned();

/// Named connection and post events on the bunkbed of the base graph:
/// A, B, F, A1..A4, B1..B4, P-, P+, Q--, Q-+, Q+-, Q++ and R.
std::map<std::string, Event> g1_event_table(const BunkbedGraph& bb);

enum class VerifyMode { Exhaustive, Sampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Sampled;
    std::uint64_t n = 1'000'000;
    std::uint64_t seed = 0;
    int threads = 1;
};

/// Raw counts from a sweep over configurations of the conditioned model
/// (28 free edges). In exhaustive mode the denominator is 2^28 and every
/// count is exact; in sampled mode counts are over n drawn configurations
/// and only the per-configuration violation counters are meaningful.
struct G1SweepCounters {
    std::uint64_t total = 0;
    std::uint64_t cA = 0, cB = 0, cF = 0, cAF = 0, cBF = 0;
    std::uint64_t cA2 = 0, cA3 = 0, cA4 = 0;
    std::uint64_t cB2 = 0, cB3 = 0, cB4 = 0;
    // Indexed by the set of extra posts (bit i = i-th free vertical).
    std::array<std::uint64_t, 64> cAS{}, cBS{};
    std::uint64_t cPF[2] = {0, 0};              // P-, P+ (each with F)
    std::uint64_t cQF[4] = {0, 0, 0, 0};        // Q--, Q-+, Q+-, Q++ (each with F)
    std::uint64_t cPQF[4] = {0, 0, 0, 0};       // P-Q--, P-Q-+, P+Q+-, P+Q++ (with F)
    std::uint64_t cPRF[2] = {0, 0};             // P- and R, P+ and R (with F)
    std::uint64_t violExtraPostMirror = 0;      // A with extra posts vs mirrored B
    std::uint64_t violMirror2 = 0, violMirror3 = 0, violMirror4 = 0;
    std::uint64_t violSwapFront = 0;            // P+ R^c F vs mirrored P- R^c F
    std::uint64_t violDecompA = 0, violDecompB = 0;

    void merge(const G1SweepCounters& o);
};

G1SweepCounters g1_sweep(VerifyMode mode, std::uint64_t n, std::uint64_t seed, int threads);

ClaimReport verify_claim_i(const VerifyOptions& opts = {});
ClaimReport verify_claim_ii(int threads = 1);
ClaimReport verify_claim_iii(int threads = 1);
ClaimReport verify_proposition(const VerifyOptions& opts = {});

/// The conditioned gap P(1- -> 9+) - P(1- -> 9-) via the exact DP engine.
Rational conditioned_gap_dp();

/// Exhaustively checks, over the configurations the events can depend on,
/// that H in L iff mirror(H, shadows) in R. Returns the violation count.
std::uint64_t mirror_bicond_violations(const BunkbedGraph& bb, const EdgeModel& model,
                                       const Event& left, const Event& right,
                                       const std::set<int>& shadows);

/// Same for an edge permutation of the bunkbed graph.
std::uint64_t perm_bicond_violations(const BunkbedGraph& bb, const EdgeModel& model,
                                     const Event& left, const Event& right,
                                     const std::vector<int>& edge_perm);

/// The arrow-reversing self-map of the base graph lifted to bunkbed edge
/// indices (horizontals keep their layer, verticals map to the partner
/// vertex).
std::vector<int> g1_reversal_edge_perm(const BunkbedGraph& bb);

} // namespace bunkbed

#endif
