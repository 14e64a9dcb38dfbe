#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ramsey {

// All randomness in the library flows through Rng. The engine is
// std::mt19937_64, whose output sequence is fixed by the standard; the
// conversions below are written out explicitly so results do not depend on
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

    std::uint64_t next() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // SplitMix64 finalizer; used to decorrelate user seeds before seeding the
    // engine and to derive child seeds.
    static std::uint64_t mix_seed(std::uint64_t x);

private:
    std::mt19937_64 engine_;
};

// Seed for trial `index` of a batch seeded with `base`:
//   mix(base ^ mix(index + 0x9e3779b97f4a7c15)).
// A pure function of (base, index), so trials can run in any order.
std::uint64_t child_seed(std::uint64_t base, std::uint64_t index);

// Uniform random k-subset of [0, n), returned sorted.
std::vector<int> sample_subset(Rng& rng, int n, int k);

}  // namespace ramsey
