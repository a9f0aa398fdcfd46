#include "bunkbed/monte_carlo.hpp"

#include "bunkbed/errors.hpp"
#include "bunkbed/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace bunkbed {

double inverse_normal_cdf(double p) {
    // Acklam's approximation, |relative error| < 1.15e-9.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    if (p <= 0 || p >= 1) throw Error("inverse_normal_cdf needs p in (0,1)");
    if (p < plow) {
        double q = std::sqrt(-2 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    if (p > phigh) {
        double q = std::sqrt(-2 * std::log(1 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    double q = p - 0.5, r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

double z_score(double confidence) {
    if (confidence <= 0 || confidence >= 1) throw Error("confidence must be in (0,1)");
    return inverse_normal_cdf(0.5 + confidence / 2);
}

std::vector<MCEstimate> monte_carlo(const BunkbedGraph& bb, const EdgeModel& model,
                                    const std::vector<Event>& events, std::uint64_t n,
                                    std::uint64_t seed, const MCOptions& opts) {
    if (model.size() != bb.edge_count()) throw UnboundReferenceError("model size mismatch");
    if (n < 1) throw Error("monte_carlo needs n >= 1");
    int ne = bb.edge_count();

    // Presence threshold on a uniform 64-bit draw. Exact for probabilities
    // with a denominator dividing 2^64 (all models in scope are dyadic).
    enum class Kind { Always, Never, Threshold };
    std::vector<Kind> kinds(ne);
    std::vector<std::uint64_t> thresholds(ne, 0);
    for (int i = 0; i < ne; ++i) {
        const Rational& p = model.p(i);
        if (p == Rational::one()) {
            kinds[i] = Kind::Always;
        } else if (p == Rational::zero()) {
            kinds[i] = Kind::Never;
        } else {
            kinds[i] = Kind::Threshold;
            BigInt t = (p.num() << 64) / p.den();
            thresholds[i] = static_cast<std::uint64_t>(t);
        }
    }

    int nthreads = std::max(1, opts.threads);
    // Fixed chunks; hit counts are integers, so any summation order gives
    // identical results.
    std::uint64_t chunk = 1 << 14;
    std::uint64_t nchunks = (n + chunk - 1) / chunk;
    std::atomic<std::uint64_t> next_chunk{0};
    std::vector<std::vector<std::uint64_t>> hits(nthreads,
                                                 std::vector<std::uint64_t>(events.size(), 0));

    auto work = [&](int tid) {
        EvalContext ctx(bb);
        SubgraphMask mask(ne);
        bool word_form = ne <= 64;
        for (;;) {
            std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= nchunks) break;
            std::uint64_t lo = c * chunk, hi = std::min(n, lo + chunk);
            for (std::uint64_t i = lo; i < hi; ++i) {
                SplitMix64 rng = SplitMix64::for_sample(seed, i);
                if (word_form) {
                    std::uint64_t w = 0;
                    for (int e = 0; e < ne; ++e) {
                        bool present = kinds[e] == Kind::Always ||
                                       (kinds[e] == Kind::Threshold && rng.next() < thresholds[e]);
                        if (kinds[e] == Kind::Never) present = false;
                        if (present) w |= std::uint64_t(1) << e;
                    }
                    ctx.load_word(w);
                } else {
                    for (int e = 0; e < ne; ++e) {
                        bool present = kinds[e] == Kind::Always ||
                                       (kinds[e] == Kind::Threshold && rng.next() < thresholds[e]);
                        if (kinds[e] == Kind::Never) present = false;
                        mask.set(e, present);
                    }
                    ctx.load(mask);
                }
                for (size_t ev = 0; ev < events.size(); ++ev)
                    if (ctx.eval(events[ev])) ++hits[tid][ev];
            }
        }
    };

    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& t : pool) t.join();
    }

    double z = z_score(opts.confidence);
    std::vector<MCEstimate> out;
    out.reserve(events.size());
    for (size_t ev = 0; ev < events.size(); ++ev) {
        MCEstimate est;
        est.n = n;
        est.seed = seed;
        est.confidence = opts.confidence;
        for (int t = 0; t < nthreads; ++t) est.hits += hits[t][ev];
        est.estimate = static_cast<double>(est.hits) / static_cast<double>(n);
        double half = z * std::sqrt(est.estimate * (1 - est.estimate) / static_cast<double>(n));
        est.ci_low = std::max(0.0, est.estimate - half);
        est.ci_high = std::min(1.0, est.estimate + half);
        out.push_back(est);
    }
    return out;
}

} // namespace bunkbed
