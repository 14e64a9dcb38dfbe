#include <doctest.h>

#include "oracles.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/pathfinder.hpp"
#include "ramsey/random.hpp"

using namespace ramsey;

TEST_CASE("exact longest path on small fixtures") {
    const auto p5 = structured_graph(GraphKind::Path, 5);
    CHECK(longest_path_exact(p5).vertex_count == 5);
    const auto c8 = structured_graph(GraphKind::Cycle, 8);
    const auto r = longest_path_exact(c8);
    CHECK(r.vertex_count == 8);
    CHECK(is_simple_path(c8, r.witness));

    // K4 minus an edge: oracle enumeration gives 4.
    const Graph k4e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(oracle::longest_path(k4e) == 4);
    CHECK(longest_path_exact(k4e).vertex_count == 4);

    CHECK(longest_path_exact(structured_graph(GraphKind::Empty, 3)).vertex_count == 1);
    CHECK(longest_path_exact(Graph{}).vertex_count == 0);
}

TEST_CASE("exact longest path agrees with exhaustive enumeration") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Rng rng(seed);
        const int n = 1 + static_cast<int>(rng.below(10));
        const auto g = generate_gnp(n, rng.uniform01(), seed);
        const auto r = longest_path_exact(g);
        CHECK(r.vertex_count == oracle::longest_path(g));
        CHECK(r.witness.size() == r.vertex_count);
        CHECK(is_simple_path(g, r.witness));
    }
}

TEST_CASE("exact cutoff") {
    const auto g = structured_graph(GraphKind::Path, 21);
    CHECK_THROWS_AS(longest_path_exact(g), SizeError);
    CHECK(longest_path_exact(g, 21).vertex_count == 21);
    CHECK_THROWS_AS(longest_path_exact(g, kMaxExactCutoff + 1), ParameterError);
}

TEST_CASE("longest monochromatic paths") {
    const auto blue_k5 = apply_strategy(structured_graph(GraphKind::Complete, 5), Constant{EdgeColor::Blue});
    const auto p = longest_mono_path_exact(blue_k5);
    CHECK(p.blue.vertex_count == 5);
    CHECK(p.red.vertex_count == 1);

    const ColoredGraph k3(structured_graph(GraphKind::Complete, 3), {EdgeColor::Blue, EdgeColor::Blue, EdgeColor::Red});
    const auto q = longest_mono_path_exact(k3);
    CHECK(q.blue.vertex_count == 3);
    CHECK(q.red.vertex_count == 2);
    CHECK(is_mono_path(k3, EdgeColor::Blue, q.blue.witness));
}

TEST_CASE("separator lower bound") {
    const auto blue_k6 = apply_strategy(structured_graph(GraphKind::Complete, 6), Constant{EdgeColor::Blue});
    CHECK(longest_mono_path_lower_bound(blue_k6, EdgeColor::Blue).vertex_count == 6);
    CHECK(longest_mono_path_lower_bound(blue_k6, EdgeColor::Red).vertex_count == 1);

    const auto split = apply_strategy(structured_graph(GraphKind::Complete, 9), SplitAdversary{1.0 / 3.0, 17});
    const auto red = longest_mono_path_lower_bound(split, EdgeColor::Red);
    CHECK(red.vertex_count >= 2);
    CHECK(red.vertex_count <= longest_mono_path_exact(split).red.vertex_count);
    CHECK(is_mono_path(split, EdgeColor::Red, red.witness));
}

TEST_CASE("lower bound never exceeds the exact value") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const int n = 2 + static_cast<int>(rng.below(15));
        const auto cg = apply_strategy(generate_gnp(n, rng.uniform01(), seed), UniformRandom{0.5, seed});
        const auto exact = longest_mono_path_exact(cg);
        for (auto color : {EdgeColor::Blue, EdgeColor::Red}) {
            const auto lb = longest_mono_path_lower_bound(cg, color);
            CHECK(lb.vertex_count <= exact.of(color).vertex_count);
            CHECK(lb.vertex_count >= 1);
            CHECK(is_mono_path(cg, color, lb.witness));
        }
    }
}

TEST_CASE("arrow oracle fixtures") {
    const auto k3 = arrows_brute(structured_graph(GraphKind::Complete, 3), 3);
    CHECK(k3.arrows);
    CHECK(k3.colorings_checked == 4);
    CHECK_FALSE(k3.refutation);

    const auto p3 = arrows_brute(structured_graph(GraphKind::Path, 3), 3);
    CHECK_FALSE(p3.arrows);
    REQUIRE(p3.refutation);
    CHECK(longest_mono_path_exact(*p3.refutation).longest().vertex_count < 3);
    CHECK(p3.refutation->color(0) != p3.refutation->color(1));

    const auto k6 = arrows_brute(structured_graph(GraphKind::Complete, 6), 3);
    CHECK(k6.arrows);
    CHECK(k6.colorings_checked == (1u << 14));

    CHECK_FALSE(arrows_brute(structured_graph(GraphKind::Complete, 4), 4).arrows);
    CHECK_THROWS_AS(arrows_brute(structured_graph(GraphKind::Complete, 8), 3), SizeError);
}

TEST_CASE("arrows P2 iff there is an edge") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const auto g = generate_gnp(1 + static_cast<int>(rng.below(6)), 0.3, seed);
        CHECK(arrows_brute(g, 2).arrows == (g.num_edges() > 0));
    }
}

TEST_CASE("arrowing is monotone under adding edges") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const int n = 3 + static_cast<int>(rng.below(4));
        const auto big = generate_gnp(n, 0.7, seed);
        if (big.num_edges() > 14) continue;
        std::vector<bool> keep(big.num_edges());
        for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = rng.bernoulli(0.6);
        const auto small = big.edge_subgraph(keep);
        for (std::size_t k : {3u, 4u}) {
            if (arrows_brute(small, k).arrows) CHECK(arrows_brute(big, k).arrows);
        }
    }
}

TEST_CASE("refutations really avoid the path") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = generate_gnp(6, 0.5, seed);
        for (std::size_t k : {3u, 4u}) {
            const auto r = arrows_brute(g, k);
            if (!r.arrows) {
                REQUIRE(r.refutation);
                CHECK(longest_mono_path_exact(*r.refutation).longest().vertex_count < k);
            }
        }
    }
}
