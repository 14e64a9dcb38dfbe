#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace ramsey {

// Scans every integer profile (x, y, x', y') in [0, max_value]^4 and every
// threshold in [0, max_threshold]; counts profiles whose four sums are all
// >= 2 * threshold yet claim_large_pair returns Neither.
struct ClaimScan {
    std::size_t profiles_checked = 0;  // (profile, threshold) combinations meeting the sum bounds
    std::size_t neither = 0;
};
ClaimScan scan_claim_profiles(std::size_t max_value, std::size_t max_threshold);

// The least m <= max_edges such that some m-edge subgraph of K_4 arrows P_3.
// Up to isomorphism every graph with at most 2 edges lives inside K_4 (plus
// isolated vertices, which do not matter), and K_3 does too, so this is the
// size-Ramsey number of P_3.
std::optional<std::size_t> size_ramsey_p3(std::size_t max_edges = 3);

// One seeded separator run on a random colored graph with floor(c * k)
// vertices, checking every state invariant after every step and, when the
// exact solver shows the target color has no k-vertex path, that the run
// reaches min(|U|, |W|) >= floor(k (c - 1) / 2).
struct SeparatorAudit {
    std::size_t vertices = 0;
    std::size_t steps = 0;
    bool invariants_ok = true;
    std::string violation;
    bool exact_no_path = false;  // exact check certified no k-vertex path of the color
    std::size_t best_balance = 0;
    std::size_t required_balance = 0;
    bool balance_ok = true;
    bool ok() const { return invariants_ok && balance_ok; }
};
SeparatorAudit separator_audit_run(std::uint64_t seed, std::size_t k = 5, double c = 4.0);

}  // namespace ramsey
