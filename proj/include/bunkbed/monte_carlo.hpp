#ifndef BUNKBED_MONTE_CARLO_HPP
#define BUNKBED_MONTE_CARLO_HPP

#include "bunkbed/event.hpp"
#include "bunkbed/model.hpp"

#include <cstdint>
#include <vector>

namespace bunkbed {

struct MCEstimate {
    std::uint64_t n = 0;
    std::uint64_t hits = 0;
    double estimate = 0;
    double confidence = 0.99;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t seed = 0;
};

struct MCOptions {
    double confidence = 0.99;
    int threads = 1;
};

/// Seeded Monte Carlo with normal-approximation confidence intervals.
/// All events are evaluated on the same n sampled configurations.
std::vector<MCEstimate> monte_carlo(const BunkbedGraph& bb, const EdgeModel& model,
                                    const std::vector<Event>& events, std::uint64_t n,
                                    std::uint64_t seed, const MCOptions& opts = {});

/// Inverse standard normal CDF (Acklam's rational approximation).
double inverse_normal_cdf(double p);

/// z-score for a two-sided confidence level, e.g. 0.99 -> 2.5758...
double z_score(double confidence);

} // namespace bunkbed

#endif
