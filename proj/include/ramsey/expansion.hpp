#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "ramsey/graph.hpp"

namespace ramsey {

// Does every pair of disjoint set_size-subsets S, T have e(S, T) != 0?
struct ExpansionReport {
    enum class Verdict { HoldsExact, FailsExact, NoFailureSampled, FailureSampled };

    std::size_t set_size = 0;
    Verdict verdict = Verdict::HoldsExact;
    // Disjoint S, T of size set_size with no edge between them.
    std::optional<std::pair<VertexSet, VertexSet>> witness;

    // Sampling mode.
    std::size_t trials = 0;
    std::size_t failures = 0;  // trials whose pair had no edge

    // Exact mode: ordered pairs (S, T) with no edge between them, out of
    // C(n, s) * C(n - s, s) ordered pairs in total.
    double failing_pairs = 0;
    double total_pairs = 0;

    bool failed() const { return witness.has_value(); }
};

std::string_view verdict_name(ExpansionReport::Verdict v);

inline constexpr int kDefaultExpansionGuard = 16;

// Exhaustive check. The witness is the lexicographically first S (as a
// sorted list) admitting a T, paired with the lowest-indexed such T. Throws
// SizeError when g has more than `guard` vertices (guard at most 30).
ExpansionReport expansion_exact(const Graph& g, std::size_t set_size, int guard = kDefaultExpansionGuard);

// Draws `trials` ordered pairs: S uniform among set_size-subsets, then T
// uniform among set_size-subsets of the rest. Trial i is driven by
// child_seed(seed, i); the witness comes from the lowest failing trial.
// Requires 1 <= set_size and 2 * set_size <= n.
ExpansionReport expansion_sampled(const Graph& g, std::size_t set_size, std::size_t trials, std::uint64_t seed);

// Natural logs of two bounds on the expected number of ordered pairs of
// disjoint (alpha n)-sets with no edge in G(cn, d/n), alpha = (c - 3)/4:
//   stirling_bound_log     = f(c, d) * n
//   exact_first_moment_log = ln[ C(cn, an) C((c-a)n, an) (1 - d/n)^((an)^2) ]
// with the binomials evaluated by log-gamma at real arguments. n = 0 gives
// (0, 0). Requires c > 3, and 0 < d < n when n > 0.
struct FirstMomentBound {
    double stirling_bound_log = 0;
    double exact_first_moment_log = 0;
};
FirstMomentBound expected_pairs_log_bound(double c, double d, std::size_t n);

}  // namespace ramsey
