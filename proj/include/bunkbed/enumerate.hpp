#ifndef BUNKBED_ENUMERATE_HPP
#define BUNKBED_ENUMERATE_HPP

#include "bunkbed/event.hpp"
#include "bunkbed/model.hpp"
#include "bunkbed/rational.hpp"

#include <vector>

namespace bunkbed {

struct EnumerateOptions {
    int cap = 30;      // maximum free edges actually enumerated
    int threads = 1;
    bool restrict_to_support = true;
};

/// Exact event probabilities by exhaustive enumeration. Edges with
/// probability 0 or 1 are fixed; free edges outside the union of the
/// events' supports are marginalized away, the rest are enumerated. All
/// events are evaluated in one sweep per configuration. Results are
/// independent of the thread count.
std::vector<Rational> exact_enumeration(const BunkbedGraph& bb, const EdgeModel& model,
                                        const std::vector<Event>& events,
                                        const EnumerateOptions& opts = {});

Rational exact_enumeration_one(const BunkbedGraph& bb, const EdgeModel& model,
                               const Event& event, const EnumerateOptions& opts = {});

} // namespace bunkbed

#endif
