#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace dadqc {

// Identical seed => identical sample sequence, everywhere.
struct RandomSeed {
    std::uint64_t value = 0;
};

// Counter-based generator: output k of a stream is a fixed 64-bit mix of
// (key, k), so sequences are reproducible and streams keyed by (seed, stream)
// are independent. The mix is the splitmix64 finalizer.
class CounterRng {
public:
    explicit CounterRng(RandomSeed seed, std::uint64_t stream = 0)
        : key_(mix(seed.value ^ 0x6a09e667f3bcc909ull, stream)) {}

    static std::uint64_t mix(std::uint64_t key, std::uint64_t counter) {
        std::uint64_t z = key + (counter + 1) * 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() { return mix(key_, counter_++); }

    // Uniform on [0, 1), 53 significant bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on [0, 2*pi).
    double next_angle() { return next_double() * 2.0 * std::numbers::pi; }

    // Uniform on [-halfwidth, halfwidth).
    double next_symmetric(double halfwidth) {
        return (2.0 * next_double() - 1.0) * halfwidth;
    }

    // Uniform on [lo, hi).
    double next_in(double lo, double hi) {
        return lo + next_double() * (hi - lo);
    }

    // Unbiased uniform integer in [0, bound) via masked rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const std::uint64_t u = next_u64() & mask;
            if (u < bound) return u;
        }
    }

    bool next_bool() { return (next_u64() & 1ull) != 0; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Independent sub-seed for a work item (ensemble instance, retry stream, ...).
inline RandomSeed derive_seed(RandomSeed seed, std::uint64_t tag) {
    return RandomSeed{CounterRng::mix(seed.value, tag ^ 0x51f15eadbeefull)};
}

}  // namespace dadqc
