#include "ramsey/expansion.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ramsey/constants.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/random.hpp"

namespace ramsey {

std::string_view verdict_name(ExpansionReport::Verdict v) {
    switch (v) {
        case ExpansionReport::Verdict::HoldsExact: return "holds_exact";
        case ExpansionReport::Verdict::FailsExact: return "fails_exact";
        case ExpansionReport::Verdict::NoFailureSampled: return "no_failure_sampled";
        case ExpansionReport::Verdict::FailureSampled: return "failure_sampled";
    }
    return "unknown";
}

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

VertexSet set_from_mask(std::uint32_t mask) {
    std::vector<Vertex> vs;
    while (mask) {
        vs.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return VertexSet(std::move(vs));
}

std::uint32_t lowest_bits(std::uint32_t mask, std::size_t count) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t low = mask & (~mask + 1);
        out |= low;
        mask ^= low;
    }
    return out;
}

}  // namespace

ExpansionReport expansion_exact(const Graph& g, std::size_t set_size, int guard) {
    if (guard > 30) throw ParameterError("expansion_exact: guard cannot exceed 30 vertices");
    const int n = g.num_vertices();
    if (n > guard)
        throw SizeError("expansion_exact: " + std::to_string(n) + " vertices exceeds the guard of " +
                        std::to_string(guard));
    if (set_size < 1) throw ParameterError("expansion_exact: set_size must be at least 1");

    ExpansionReport r;
    r.set_size = set_size;
    r.verdict = ExpansionReport::Verdict::HoldsExact;
    const int s = static_cast<int>(set_size);
    r.total_pairs = binomial(n, s) * binomial(n - s, s);
    if (2 * s > n) return r;  // no disjoint pairs at all

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    const std::uint32_t all = (1u << n) - 1;

    // Combinations in lexicographic order of their sorted member lists.
    std::vector<int> pick(static_cast<std::size_t>(s));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::uint32_t s_mask = 0;
        std::uint32_t reach = 0;
        for (int v : pick) {
            s_mask |= 1u << v;
            reach |= adj[v];
        }
        const std::uint32_t allowed = all & ~(s_mask | reach);
        const int room = std::popcount(allowed);
        if (room >= s) {
            r.failing_pairs += binomial(room, s);
            if (!r.witness)
                r.witness = std::pair{set_from_mask(s_mask), set_from_mask(lowest_bits(allowed, set_size))};
        }
        int i = s - 1;
        while (i >= 0 && pick[i] == n - s + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (r.witness) r.verdict = ExpansionReport::Verdict::FailsExact;
    return r;
}

ExpansionReport expansion_sampled(const Graph& g, std::size_t set_size, std::size_t trials, std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    if (set_size < 1 || 2 * set_size > n)
        throw ParameterError("expansion_sampled: need 1 <= set_size and 2 * set_size <= n");

    ExpansionReport r;
    r.set_size = set_size;
    r.trials = trials;
    r.verdict = ExpansionReport::Verdict::NoFailureSampled;

    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::size_t> swaps(2 * set_size);
    std::vector<std::uint64_t> stamp(n, 0);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng rng(child_seed(seed, trial));
        // Partial Fisher-Yates: pool[0, s) is S, pool[s, 2s) is T.
        for (std::size_t i = 0; i < 2 * set_size; ++i) {
            swaps[i] = i + static_cast<std::size_t>(rng.below(n - i));
            std::swap(pool[i], pool[swaps[i]]);
        }
        const std::uint64_t mark = trial + 1;
        for (std::size_t i = 0; i < set_size; ++i) stamp[pool[i]] = mark;
        bool joined = false;
        for (std::size_t i = set_size; i < 2 * set_size && !joined; ++i)
            for (Vertex w : g.neighbors(pool[i]))
                if (stamp[w] == mark) {
                    joined = true;
                    break;
                }
        if (!joined) {
            ++r.failures;
            if (!r.witness) {
                r.witness = std::pair{VertexSet(std::vector<Vertex>(pool.begin(), pool.begin() + set_size)),
                                      VertexSet(std::vector<Vertex>(pool.begin() + set_size,
                                                                    pool.begin() + 2 * set_size))};
            }
        }
        // Undo the swaps so the next trial starts from the identity.
        for (std::size_t i = 2 * set_size; i-- > 0;) std::swap(pool[i], pool[swaps[i]]);
    }
    if (r.witness) r.verdict = ExpansionReport::Verdict::FailureSampled;
    return r;
}

FirstMomentBound expected_pairs_log_bound(double c, double d, std::size_t n) {
    if (!(c > 3.0)) throw ParameterError("expected_pairs_log_bound: c must exceed 3");
    if (n == 0) return {};
    const double nn = static_cast<double>(n);
    if (!(d > 0.0 && d < nn)) throw ParameterError("expected_pairs_log_bound: need 0 < d < n");
    const double a = alpha_of(c) * nn;
    const double cn = c * nn;
    auto log_choose = [](double top, double k) {
        return std::lgamma(top + 1.0) - std::lgamma(k + 1.0) - std::lgamma(top - k + 1.0);
    };
    FirstMomentBound b;
    b.stirling_bound_log = entropy_gap(c, d) * nn;
    b.exact_first_moment_log = log_choose(cn, a) + log_choose(cn - a, a) + a * a * std::log1p(-d / nn);
    return b;
}

}  // namespace ramsey
