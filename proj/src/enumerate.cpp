#include "bunkbed/enumerate.hpp"

#include "bunkbed/errors.hpp"

#include <atomic>
#include <thread>

namespace bunkbed {

namespace {

struct Shard {
    std::vector<BigInt> sums; // per-event accumulated numerators
};

} // namespace

std::vector<Rational> exact_enumeration(const BunkbedGraph& bb, const EdgeModel& model,
                                        const std::vector<Event>& events,
                                        const EnumerateOptions& opts) {
    if (model.size() != bb.edge_count()) throw UnboundReferenceError("model size mismatch");
    int ne = bb.edge_count();

    // Union of event supports.
    SubgraphMask support = bb.empty_mask();
    if (opts.restrict_to_support) {
        for (const Event& ev : events) {
            SubgraphMask s = event_support(bb, ev);
            for (int i = 0; i < ne; ++i)
                if (s.test(i)) support.set(i);
        }
    } else {
        support = bb.full_mask();
    }

    std::vector<int> free_bits;
    SubgraphMask forced = bb.empty_mask();
    for (int i = 0; i < ne; ++i) {
        if (model.is_forced_present(i)) forced.set(i);
        else if (model.is_free(i) && support.test(i)) free_bits.push_back(i);
    }
    int m = static_cast<int>(free_bits.size());
    if (m > opts.cap)
        throw TooManyFreeEdgesError(std::to_string(m) + " > cap " + std::to_string(opts.cap));

    // Dyadic fast path: every enumerated edge has probability 1/2, so each
    // configuration has weight 1 over denominator 2^m.
    bool halves = true;
    for (int b : free_bits)
        if (model.p(b) != Rational::half()) halves = false;

    BigInt denom = 1;
    std::vector<std::pair<BigInt, BigInt>> weights; // (absent, present) numerators
    if (!halves) {
        for (int b : free_bits) {
            const Rational& p = model.p(b);
            denom *= p.den();
            weights.emplace_back(p.den() - p.num(), p.num());
        }
    } else {
        denom = BigInt(1) << m;
    }

    int shard_bits = std::min(m, 6);
    int nshards = 1 << shard_bits;
    int low_bits = m - shard_bits;
    std::vector<Shard> shards(nshards);
    std::atomic<int> next_shard{0};

    auto work = [&]() {
        EvalContext ctx(bb);
        bool word_form = ne <= 64;
        SubgraphMask mask = forced;
        for (;;) {
            int s = next_shard.fetch_add(1);
            if (s >= nshards) break;
            Shard& out = shards[s];
            out.sums.assign(events.size(), BigInt(0));
            std::vector<std::uint64_t> counts(events.size(), 0);
            std::uint64_t lo_count = std::uint64_t(1) << low_bits;
            for (std::uint64_t lo = 0; lo < lo_count; ++lo) {
                std::uint64_t cfg = (static_cast<std::uint64_t>(s) << low_bits) | lo;
                if (word_form) {
                    std::uint64_t w = forced.word0();
                    for (int i = 0; i < m; ++i)
                        if ((cfg >> i) & 1) w |= std::uint64_t(1) << free_bits[i];
                    ctx.load_word(w);
                } else {
                    for (int i = 0; i < m; ++i) mask.set(free_bits[i], (cfg >> i) & 1);
                    ctx.load(mask);
                }
                if (halves) {
                    for (size_t e = 0; e < events.size(); ++e)
                        if (ctx.eval(events[e])) ++counts[e];
                } else {
                    BigInt w = 1;
                    for (int i = 0; i < m; ++i)
                        w *= (cfg >> i) & 1 ? weights[i].second : weights[i].first;
                    for (size_t e = 0; e < events.size(); ++e)
                        if (ctx.eval(events[e])) out.sums[e] += w;
                }
            }
            if (halves)
                for (size_t e = 0; e < events.size(); ++e) out.sums[e] = counts[e];
        }
    };

    int nthreads = std::max(1, std::min(opts.threads, nshards));
    if (nthreads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::vector<Rational> result;
    result.reserve(events.size());
    for (size_t e = 0; e < events.size(); ++e) {
        BigInt total = 0;
        for (const Shard& s : shards) total += s.sums[e];
        result.emplace_back(total, denom);
    }
    return result;
}

Rational exact_enumeration_one(const BunkbedGraph& bb, const EdgeModel& model,
                               const Event& event, const EnumerateOptions& opts) {
    return exact_enumeration(bb, model, {event}, opts)[0];
}

} // namespace bunkbed
