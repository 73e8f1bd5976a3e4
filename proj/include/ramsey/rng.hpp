#pragma once

#include <cstdint>

namespace ramsey {

/**
 * splitmix64 generator. Deterministic across platforms, unlike the standard
 * library distributions, so seeded runs reproduce bit-identical output
 * everywhere.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling keeps the distribution exact
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t x;
        do { x = next(); } while (x > limit);
        return x % bound;
    }

    int below_int(int bound) { return int(below(std::uint64_t(bound))); }

    /// Uniform double in [0, 1).
    double unit() { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace ramsey
