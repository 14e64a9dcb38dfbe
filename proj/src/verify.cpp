#include "ramsey/verify.hpp"

#include <bit>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/pathfinder.hpp"
#include "ramsey/random.hpp"
#include "ramsey/separator.hpp"
#include "ramsey/theorem.hpp"

namespace ramsey {

ClaimScan scan_claim_profiles(std::size_t max_value, std::size_t max_threshold) {
    ClaimScan scan;
    for (std::size_t t = 0; t <= max_threshold; ++t)
        for (std::size_t x = 0; x <= max_value; ++x)
            for (std::size_t y = 0; y <= max_value; ++y)
                for (std::size_t xp = 0; xp <= max_value; ++xp)
                    for (std::size_t yp = 0; yp <= max_value; ++yp) {
                        const ProfileSizes s{x, y, xp, yp};
                        if (s.min_sum() < 2 * t) continue;
                        ++scan.profiles_checked;
                        if (claim_large_pair(s, t) == LargePair::Neither) ++scan.neither;
                    }
    return scan;
}

std::optional<std::size_t> size_ramsey_p3(std::size_t max_edges) {
    const auto k4 = structured_graph(GraphKind::Complete, 4).edges();
    for (std::size_t m = 0; m <= max_edges && m <= k4.size(); ++m) {
        for (unsigned subset = 0; subset < (1u << k4.size()); ++subset) {
            if (static_cast<std::size_t>(std::popcount(subset)) != m) continue;
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < k4.size(); ++i)
                if (subset >> i & 1) edges.push_back(k4[i]);
            if (arrows_brute(Graph(4, std::move(edges)), 3).arrows) return m;
        }
    }
    return std::nullopt;
}

SeparatorAudit separator_audit_run(std::uint64_t seed, std::size_t k, double c) {
    SeparatorAudit run;
    const auto n = host_vertex_count(k, c);
    run.vertices = n;
    Rng rng(seed);
    // Sparse enough that a color class often has no k-vertex path.
    const double p = 0.6 * static_cast<double>(k) / static_cast<double>(n) * (0.5 + rng.uniform01());
    const auto g = generate_gnp(static_cast<int>(n), p, child_seed(seed, 0));
    const auto cg = apply_strategy(g, UniformRandom{0.5, child_seed(seed, 1)});
    const auto color = rng.bernoulli(0.5) ? EdgeColor::Blue : EdgeColor::Red;

    SeparatorProcess proc(cg, color);
    std::size_t best = 0;
    while (!proc.done()) {
        proc.step();
        if (auto bad = proc.check_invariants()) {
            run.invariants_ok = false;
            run.violation = *bad;
            break;
        }
        if (proc.path().size() >= k) break;
        best = std::max(best, std::min(proc.unexplored_count(), proc.exhausted().size()));
    }
    run.steps = proc.step_count();
    run.best_balance = best;
    run.required_balance = separator_set_size(k, c);
    if (n <= static_cast<std::size_t>(kDefaultExactCutoff)) {
        run.exact_no_path = longest_path_exact(cg.color_class(color)).vertex_count < k;
        if (run.exact_no_path) run.balance_ok = best >= run.required_balance;
    }
    return run;
}

}  // namespace ramsey
