#ifndef BUNKBED_RNG_HPP
#define BUNKBED_RNG_HPP

#include <cstdint>

namespace bunkbed {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64 stream. Sample streams are keyed by (seed, index), so sample
/// i is a pure function of the pair and results never depend on how work
/// is split across threads.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix64(seed ^ 0x6A09E667F3BCC909ULL) ^ mix64(index));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

} // namespace bunkbed

#endif
