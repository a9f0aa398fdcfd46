#ifndef BUNKBED_MODEL_HPP
#define BUNKBED_MODEL_HPP

#include "bunkbed/bunkbed_graph.hpp"
#include "bunkbed/rational.hpp"

#include <set>
#include <vector>

namespace bunkbed {

/// Per-edge retention probabilities, aligned with the canonical bunkbed
/// edge ordering. Probabilities are exact rationals in [0,1].
class EdgeModel {
public:
    EdgeModel() = default;
    EdgeModel(const BunkbedGraph& bb, Rational p)
        : p_(bb.edge_count(), check(p)) {}

    int size() const { return static_cast<int>(p_.size()); }
    const Rational& p(int edge) const { return p_[edge]; }
    void set(int edge, Rational v) { p_[edge] = check(std::move(v)); }

    bool is_forced_present(int edge) const { return p_[edge] == Rational::one(); }
    bool is_forced_absent(int edge) const { return p_[edge] == Rational::zero(); }
    bool is_free(int edge) const { return !is_forced_present(edge) && !is_forced_absent(edge); }

    /// True when every free edge has probability 1/2 (counting fast path).
    bool all_free_half() const {
        for (const auto& p : p_)
            if (p != Rational::zero() && p != Rational::one() && p != Rational::half())
                return false;
        return true;
    }

private:
    static Rational check(Rational p);
    std::vector<Rational> p_;
};

/// Uniform retention probability p on every edge.
EdgeModel uniform_model(const BunkbedGraph& bb, Rational p = Rational::half());

/// Percolation conditioned on posts at T: verticals at T are forced
/// present, every other edge keeps probability p.
EdgeModel conditioned_model(const BunkbedGraph& bb, const std::set<std::string>& T,
                            Rational p = Rational::half());

} // namespace bunkbed

#endif
