#include "ramsey/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ramsey/errors.hpp"

namespace ramsey {

std::uint64_t Rng::mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw ParameterError("Rng::below: bound must be positive");
    // Rejection on the top of the range keeps the result exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t child_seed(std::uint64_t base, std::uint64_t index) {
    return Rng::mix_seed(base ^ Rng::mix_seed(index + 0x9e3779b97f4a7c15ULL));
}

std::vector<int> sample_subset(Rng& rng, int n, int k) {
    if (k < 0 || k > n) throw ParameterError("sample_subset: need 0 <= k <= n");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace ramsey
