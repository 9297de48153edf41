#pragma once

#include <cstdint>

namespace fgl {

/**
 * splitmix64 generator.  The algorithm is pinned here (rather than using
 * std::mt19937 + distributions) so that a seed reproduces the same stream
 * on every platform; seeds are recorded in reports and golden files.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n); n == 0 returns 0
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// uniform in [lo, hi], inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace fgl
