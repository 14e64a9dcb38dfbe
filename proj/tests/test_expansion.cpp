#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ramsey/constants.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/expansion.hpp"
#include "ramsey/random.hpp"
#include "ramsey/separator.hpp"

using namespace ramsey;
using Verdict = ExpansionReport::Verdict;

namespace {

void check_witness(const Graph& g, const ExpansionReport& r) {
    REQUIRE(r.witness);
    const auto& [s, t] = *r.witness;
    CHECK(s.size() == r.set_size);
    CHECK(t.size() == r.set_size);
    CHECK(s.disjoint(t));
    CHECK(edges_between(g, s, t) == 0);
}

}  // namespace

TEST_CASE("exact expansion fixtures") {
    const auto empty = structured_graph(GraphKind::Empty, 8);
    const auto r1 = expansion_exact(empty, 1);
    CHECK(r1.verdict == Verdict::FailsExact);
    CHECK(r1.witness->first == VertexSet{0});
    CHECK(r1.witness->second == VertexSet{1});

    const auto r2 = expansion_exact(structured_graph(GraphKind::Complete, 8), 2);
    CHECK(r2.verdict == Verdict::HoldsExact);
    CHECK_FALSE(r2.witness);
    CHECK(r2.failing_pairs == 0);

    const auto c8 = structured_graph(GraphKind::Cycle, 8);
    const auto r3 = expansion_exact(c8, 3);
    CHECK(r3.verdict == Verdict::FailsExact);
    CHECK(r3.witness->first == VertexSet{0, 1, 2});
    CHECK(r3.witness->second == VertexSet{4, 5, 6});
    const auto brute = oracle::expansion_pairs(c8, 3);
    CHECK(r3.failing_pairs == brute.failing);
    CHECK(r3.total_pairs == brute.total);
    CHECK(r3.total_pairs == 56.0 * 10.0);
}

TEST_CASE("exact failing-pair counts match enumeration of all set pairs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const int n = 2 + static_cast<int>(rng.below(9));
        const auto g = generate_gnp(n, rng.uniform01() * 0.6, seed);
        const auto s = 1 + rng.below(static_cast<std::uint64_t>(n / 2));
        const auto r = expansion_exact(g, s);
        const auto brute = oracle::expansion_pairs(g, static_cast<int>(s));
        CHECK(r.failing_pairs == brute.failing);
        CHECK(r.total_pairs == brute.total);
        CHECK((r.verdict == Verdict::FailsExact) == (brute.failing > 0));
        if (r.failed()) {
            check_witness(g, r);
            CHECK(r.witness->first.members().front() < r.witness->second.members().front());
        }
    }
}

TEST_CASE("exact expansion guards") {
    CHECK_THROWS_AS(expansion_exact(structured_graph(GraphKind::Empty, 17), 2), SizeError);
    CHECK_THROWS_AS(expansion_exact(structured_graph(GraphKind::Empty, 5), 0), ParameterError);
    CHECK(expansion_exact(structured_graph(GraphKind::Empty, 5), 3).verdict == Verdict::HoldsExact);
}

TEST_CASE("sampled expansion fixtures") {
    const auto k100 = structured_graph(GraphKind::Complete, 100);
    for (std::size_t s : {1u, 10u, 50u}) CHECK(expansion_sampled(k100, s, 200, 3).verdict == Verdict::NoFailureSampled);

    const auto empty = structured_graph(GraphKind::Empty, 10);
    const auto r = expansion_sampled(empty, 1, 5, 3);
    CHECK(r.verdict == Verdict::FailureSampled);
    CHECK(r.failures == 5);
    check_witness(empty, r);

    CHECK_THROWS_AS(expansion_sampled(empty, 6, 5, 3), ParameterError);
    CHECK_THROWS_AS(expansion_sampled(empty, 0, 5, 3), ParameterError);
}

TEST_CASE("sampling is reproducible and never contradicts the exact answer") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const int n = 4 + static_cast<int>(rng.below(9));
        const auto g = generate_gnp(n, rng.uniform01() * 0.5, seed);
        const auto s = 1 + rng.below(static_cast<std::uint64_t>(n / 2));
        const auto a = expansion_sampled(g, s, 500, seed);
        const auto b = expansion_sampled(g, s, 500, seed);
        CHECK(a.failures == b.failures);
        CHECK(a.witness == b.witness);
        if (a.failed()) {
            check_witness(g, a);
            CHECK(expansion_exact(g, s).verdict == Verdict::FailsExact);
        }
    }
}

TEST_CASE("full-scale sampled expansion at n = 1000") {
    const std::size_t n = 1000;
    const auto g = generate_gnp(static_cast<int>(host_vertex_count(n, kReferenceC)), kReferenceD / n, 1000);
    const auto s = large_set_threshold(n, kReferenceC);
    CHECK(s == 1072);
    const auto r = expansion_sampled(g, s, 100000, 77);
    CHECK(r.verdict == Verdict::NoFailureSampled);
    CHECK(r.failures == 0);
}

TEST_CASE("first moment bounds") {
    const auto b = expected_pairs_log_bound(7.29, 5.14, 1000);
    CHECK(b.stirling_bound_log == doctest::Approx(1000 * oracle::f(7.29, 5.14)).epsilon(1e-12));
    CHECK(b.stirling_bound_log < -8.0);
    CHECK(b.stirling_bound_log > -9.0);

    for (std::size_t n : {50u, 100u, 1000u, 10000u, 100000u}) {
        const auto bn = expected_pairs_log_bound(7.29, 5.14, n);
        // The multinomial coefficient never exceeds its entropy bound and
        // (1 - d/n)^k <= exp(-dk/n), so the exact side is below the Stirling side.
        CHECK(bn.exact_first_moment_log <= bn.stirling_bound_log + 0.5 * std::log(static_cast<double>(n)));
        // ... and only by lower-order terms: a polynomial factor from the
        // multinomial plus d^2 alpha^2 / 2 (about 15.2) from log1p's second term.
        CHECK(bn.stirling_bound_log - bn.exact_first_moment_log < 2.0 * std::log(static_cast<double>(n)) + 20.0);
    }

    const auto zero = expected_pairs_log_bound(7.29, 5.14, 0);
    CHECK(zero.stirling_bound_log == 0);
    CHECK(zero.exact_first_moment_log == 0);
    CHECK_THROWS_AS(expected_pairs_log_bound(3.0, 5.14, 100), ParameterError);
    CHECK_THROWS_AS(expected_pairs_log_bound(7.29, 200, 100), ParameterError);
}

TEST_CASE("first moment bounds decrease in d") {
    for (double c : {4.0, 7.29, 12.0}) {
        double prev_s = INFINITY, prev_e = INFINITY;
        for (double d = 0.5; d < 20; d += 0.5) {
            const auto b = expected_pairs_log_bound(c, d, 500);
            CHECK(b.stirling_bound_log < prev_s);
            CHECK(b.exact_first_moment_log < prev_e);
            prev_s = b.stirling_bound_log;
            prev_e = b.exact_first_moment_log;
        }
    }
}

TEST_CASE("sampled failures stay within the Markov bound") {
    // P(some edge-free pair exists) <= E[X] <= exp(f n); sampled failures
    // can only be rarer still.
    for (std::size_t n : {150u, 600u}) {
        const auto vertices = static_cast<int>(host_vertex_count(n, kReferenceC));
        const auto s = large_set_threshold(n, kReferenceC);
        const double bound = std::exp(entropy_gap(kReferenceC, kReferenceD) * static_cast<double>(n));
        std::size_t failed_instances = 0;
        for (std::uint64_t i = 0; i < 30; ++i) {
            const auto g = generate_gnp(vertices, kReferenceD / static_cast<double>(n), child_seed(n, i));
            if (expansion_sampled(g, s, 500, child_seed(n + 1, i)).failed()) ++failed_instances;
        }
        // At most Binomial(30, 0.28) failing instances; 16 is its 99.9% quantile.
        CHECK(failed_instances <= (n == 150 ? 16u : 0u));
        CHECK(bound < (n == 150 ? 0.29 : 0.007));
    }
}
