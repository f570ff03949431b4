#pragma once

#include <cstdint>

namespace fictus {

// SplitMix64 finalizer.  Every random draw in the generator goes through
// this mixer so that results are identical across platforms and thread
// counts; std::uniform_int_distribution is implementation-defined and is
// deliberately avoided.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent sub-streams are keyed by (seed, tag, a, b).  Entity kinds
// get distinct tags so that, e.g., the dob stream of person 7 never
// collides with the hobby stream of person 7.
namespace stream_tag {
constexpr uint64_t tree = 0x7472656500000001ULL;
constexpr uint64_t surname = 0x7375726e00000002ULL;
constexpr uint64_t first_name = 0x666e616d00000003ULL;
constexpr uint64_t dob = 0x646f620000000004ULL;
constexpr uint64_t occupation = 0x6f63637000000005ULL;
constexpr uint64_t hobby = 0x686f626200000006ULL;
constexpr uint64_t friendship = 0x6672696e00000007ULL;
constexpr uint64_t question = 0x7165737400000008ULL;
}  // namespace stream_tag

inline uint64_t derive_seed(uint64_t seed, uint64_t tag, uint64_t a = 0, uint64_t b = 0) {
    uint64_t s = mix64(seed ^ tag);
    s = mix64(s ^ a);
    if (b) s = mix64(s ^ b);
    return s;
}

class split_mix64 {
public:
    explicit split_mix64(uint64_t seed = 0) : state_(seed) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform in [0, bound); Lemire's multiply-shift with rejection.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        while (true) {
            uint64_t x = next();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            uint64_t lo = static_cast<uint64_t>(m);
            if (lo >= bound || lo >= static_cast<uint64_t>(-static_cast<int64_t>(bound)) % bound)
                return static_cast<uint64_t>(m >> 64);
        }
    }

    // Uniform integer in [lo, hi] inclusive.
    int64_t between(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1) with 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_double() < p;
    }

private:
    uint64_t state_;
};

}  // namespace fictus
