#include "bunkbed/reach_dp.hpp"

#include "bunkbed/errors.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace bunkbed {

namespace {

// Weight policies. Exact arithmetic keeps integer numerators over one
// common denominator (the product of the denominators of all branched
// probabilities); doubles carry the probability directly.
struct ExactPolicy {
    using W = BigInt;
    BigInt denom{1};
    BigInt pres, abs, same;
    void begin_branch(const Rational& p) {
        denom *= p.den();
        pres = p.num();
        abs = p.den() - p.num();
        same = p.den();
    }
    void mul_add(W& acc, const W& w, const BigInt& f) {
        if (f == 1)
            acc += w;
        else
            acc += w * f;
    }
    Rational result(const W& num) const { return Rational(num, denom); }
};

struct DoublePolicy {
    using W = double;
    double pres = 0, abs = 0, same = 1;
    void begin_branch(const Rational& p) {
        pres = p.approx();
        abs = 1.0 - pres;
        same = 1.0;
    }
    void mul_add(W& acc, const W& w, double f) { acc += w * f; }
    Rational result(double) const { throw Error("unreachable"); }
};

template <class Policy>
class FrontierDp {
public:
    using W = typename Policy::W;
    using Table = std::unordered_map<std::uint64_t, W>;

    FrontierDp(const BunkbedGraph& bb, const EdgeModel& model, BunkbedVertex source,
               BunkbedVertex target)
        : bb_(bb), model_(model), source_(source), target_(target) {}

    W run() {
        const DiGraph& g = bb_.base();
        std::vector<int> order = topological_order(g); // throws if cyclic
        int n = g.vertex_count();

        std::vector<std::vector<std::pair<int, int>>> in_edges(n);  // (tail, base edge idx)
        std::vector<std::vector<std::pair<int, int>>> out_edges(n); // (head, base edge idx)
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges()[e];
            in_edges[v].emplace_back(u, e);
            out_edges[u].emplace_back(v, e);
        }
        // A vertex with a single out-neighbour pushes its out-edges as soon
        // as its own status is final and leaves the frontier immediately.
        // This keeps fan-in/fan-out bundles (such as the gadget strands)
        // from piling up in the joint state.
        std::vector<bool> push_early(n);
        std::vector<int> out_left(n, 0);
        for (int v = 0; v < n; ++v) {
            push_early[v] = out_edges[v].size() == 1;
            if (!push_early[v]) out_left[v] = static_cast<int>(out_edges[v].size());
        }

        slot_of_.assign(n, -1);
        table_.clear();
        table_.emplace(0, W(1));

        for (int v : order) {
            int slot = slot_of_[v] >= 0 ? slot_of_[v] : alloc_slot();
            slot_of_[v] = slot;

            // Pull the in-edges whose tails did not push early.
            for (auto [u, e] : in_edges[v]) {
                if (push_early[u]) continue;
                branch_edge(model_.p(bb_.lower(e)), slot_of_[u], 0, slot, 0);
                branch_edge(model_.p(bb_.upper(e)), slot_of_[u], 1, slot, 1);
            }
            if (v == source_.base) force_bit(slot, source_.layer == Layer::Lower ? 0 : 1);

            branch_vertical(model_.p(bb_.vertical(v)), slot);

            for (auto [u, e] : in_edges[v]) {
                (void)e;
                if (!push_early[u] && --out_left[u] == 0 && u != target_.base) drop_vertex(u);
            }
            if (push_early[v]) {
                auto [w, e] = out_edges[v][0];
                if (slot_of_[w] < 0) slot_of_[w] = alloc_slot();
                branch_edge(model_.p(bb_.lower(e)), slot, 0, slot_of_[w], 0);
                branch_edge(model_.p(bb_.upper(e)), slot, 1, slot_of_[w], 1);
                if (v != target_.base) drop_vertex(v);
            } else if (out_left[v] == 0 && v != target_.base) {
                drop_vertex(v);
            }
        }

        int ts = slot_of_[target_.base];
        std::uint64_t bit = std::uint64_t(1) << (2 * ts + (target_.layer == Layer::Lower ? 0 : 1));
        W hit(0);
        for (const auto& [key, w] : table_)
            if (key & bit) hit += w;
        return hit;
    }

    Policy policy;

private:
    int alloc_slot() {
        for (int s = 0; s < 32; ++s)
            if (!(used_slots_ >> s & 1)) {
                used_slots_ |= std::uint64_t(1) << s;
                return s;
            }
        throw Error("frontier too wide");
    }

    void rebuild(Table& next) {
        table_.swap(next);
        next.clear();
    }

    // Branch on one directed bunkbed edge from (src_slot, src_bit) into
    // (dst_slot, dst_bit): when present and the source bit is set, the
    // destination bit becomes set.
    void branch_edge(const Rational& p, int src_slot, int src_bit, int dst_slot, int dst_bit) {
        std::uint64_t sbit = std::uint64_t(1) << (2 * src_slot + src_bit);
        std::uint64_t dbit = std::uint64_t(1) << (2 * dst_slot + dst_bit);
        if (p == Rational::zero()) return;
        if (p == Rational::one()) {
            Table next;
            next.reserve(table_.size());
            for (auto& [key, w] : table_) {
                std::uint64_t k2 = (key & sbit) ? key | dbit : key;
                auto [it, fresh] = next.try_emplace(k2, std::move(w));
                if (!fresh) it->second += w;
            }
            rebuild(next);
            return;
        }
        policy.begin_branch(p);
        Table next;
        next.reserve(table_.size() * 2);
        for (auto& [key, w] : table_) {
            if (!(key & sbit) || (key & dbit)) {
                // Presence cannot change anything; both branches coincide.
                policy.mul_add(next[key], w, policy.same);
            } else {
                policy.mul_add(next[key | dbit], w, policy.pres);
                policy.mul_add(next[key], w, policy.abs);
            }
        }
        rebuild(next);
    }

    // The bidirected vertical at a pair: when present, either reached copy
    // makes both reached.
    void branch_vertical(const Rational& p, int slot) {
        std::uint64_t lo = std::uint64_t(1) << (2 * slot);
        std::uint64_t hi = lo << 1;
        std::uint64_t both = lo | hi;
        auto promote = [&](std::uint64_t key) { return (key & both) ? key | both : key; };
        if (p == Rational::zero()) return;
        if (p == Rational::one()) {
            Table next;
            next.reserve(table_.size());
            for (auto& [key, w] : table_) {
                auto [it, fresh] = next.try_emplace(promote(key), std::move(w));
                if (!fresh) it->second += w;
            }
            rebuild(next);
            return;
        }
        policy.begin_branch(p);
        Table next;
        next.reserve(table_.size() * 2);
        for (auto& [key, w] : table_) {
            std::uint64_t k2 = promote(key);
            if (k2 == key) {
                policy.mul_add(next[key], w, policy.same);
            } else {
                policy.mul_add(next[k2], w, policy.pres);
                policy.mul_add(next[key], w, policy.abs);
            }
        }
        rebuild(next);
    }

    void force_bit(int slot, int bit) {
        std::uint64_t b = std::uint64_t(1) << (2 * slot + bit);
        Table next;
        next.reserve(table_.size());
        for (auto& [key, w] : table_) {
            auto [it, fresh] = next.try_emplace(key | b, std::move(w));
            if (!fresh) it->second += w;
        }
        rebuild(next);
    }

    void drop_vertex(int v) {
        drop(slot_of_[v]);
        slot_of_[v] = -1;
    }

    void drop(int slot) {
        std::uint64_t mask = std::uint64_t(3) << (2 * slot);
        Table next;
        next.reserve(table_.size());
        for (auto& [key, w] : table_) {
            auto [it, fresh] = next.try_emplace(key & ~mask, std::move(w));
            if (!fresh) it->second += w;
        }
        rebuild(next);
        used_slots_ &= ~(std::uint64_t(1) << slot);
    }

    const BunkbedGraph& bb_;
    const EdgeModel& model_;
    BunkbedVertex source_, target_;
    Table table_;
    std::vector<int> slot_of_;
    std::uint64_t used_slots_ = 0;
};

} // namespace

Rational exact_reach_dp(const BunkbedGraph& bb, const EdgeModel& model,
                        BunkbedVertex source, BunkbedVertex target) {
    if (model.size() != bb.edge_count()) throw UnboundReferenceError("model size mismatch");
    if (!is_acyclic(bb.base())) throw BaseNotAcyclicError("exact_reach_dp requires an acyclic base");
    FrontierDp<ExactPolicy> dp(bb, model, source, target);
    BigInt hit = dp.run();
    return dp.policy.result(hit);
}

double reach_dp_double(const BunkbedGraph& bb, const EdgeModel& model,
                       BunkbedVertex source, BunkbedVertex target) {
    if (model.size() != bb.edge_count()) throw UnboundReferenceError("model size mismatch");
    if (!is_acyclic(bb.base())) throw BaseNotAcyclicError("exact_reach_dp requires an acyclic base");
    FrontierDp<DoublePolicy> dp(bb, model, source, target);
    return dp.run();
}

} // namespace bunkbed
