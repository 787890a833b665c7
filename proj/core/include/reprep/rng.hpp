#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace reprep {

/// Deterministic PRNG commitment "reprep-rng-1".
///
/// Every random choice in this codebase flows through this generator so that
/// any run is reproducible from its master seed, on any platform:
///
///   - Engine: SplitMix64. next(): state += 0x9E3779B97F4A7C15, then the
///     standard finalizer (xor-shift 30 / mul 0xBF58476D1CE4E5B9 /
///     xor-shift 27 / mul 0x94D049BB133111EB / xor-shift 31).
///   - Sub-seed derivation: derive(seed, index) is the (index+1)-th output of
///     the engine seeded with `seed`, computed in closed form.
///   - bounded(n): unbiased rejection sampling; reject outputs below
///     (2^64 - n) mod n, then reduce mod n.
///   - shuffle: Fisher-Yates from the back, j = bounded(i + 1).
///
/// Changing any of these rules is a format break and would invalidate every
/// recorded seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). n must be nonzero.
    std::uint64_t bounded(std::uint64_t n) {
        std::uint64_t min = (0 - n) % n;
        std::uint64_t r;
        do { r = next(); } while (r < min);
        return r % n;
    }

    /// Uniform in [0, 1) with 53 random bits; for diagnostics only, never for
    /// anything whose exactness matters.
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = std::size_t(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Closed-form derive(seed, index): the (index+1)-th SplitMix64 output of a
/// stream seeded at `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Identity permutation [0, n).
inline std::vector<int> identity_permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

/// Seeded uniformly random permutation of [0, n).
inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> p = identity_permutation(n);
    Rng rng(seed);
    rng.shuffle(p);
    return p;
}

} // namespace reprep
