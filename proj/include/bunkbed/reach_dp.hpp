#ifndef BUNKBED_REACH_DP_HPP
#define BUNKBED_REACH_DP_HPP

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/model.hpp"
#include "bunkbed/rational.hpp"

namespace bunkbed {

/// Exact P(source -> target) by frontier dynamic programming. Base vertex
/// pairs are processed in a topological order of the base graph, tracking
/// the joint distribution of reached-status (neither/lower/upper/both) over
/// the pairs still wired to unprocessed pairs. Polynomial in the graph size
/// as long as the frontier stays narrow. Requires an acyclic base graph.
Rational exact_reach_dp(const BunkbedGraph& bb, const EdgeModel& model,
                        BunkbedVertex source, BunkbedVertex target);

/// Same dynamic program in double precision, for fast sweeps.
double reach_dp_double(const BunkbedGraph& bb, const EdgeModel& model,
                       BunkbedVertex source, BunkbedVertex target);

} // namespace bunkbed

#endif
