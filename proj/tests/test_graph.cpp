#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/random.hpp"

using namespace ramsey;

TEST_CASE("gnp extremes") {
    CHECK(generate_gnp(5, 0.0, 42).num_edges() == 0);
    CHECK(generate_gnp(5, 0.0, 42).num_vertices() == 5);
    CHECK(generate_gnp(5, 1.0, 7) == structured_graph(GraphKind::Complete, 5));
    CHECK(generate_gnp(5, 1.0, 7).num_edges() == 10);
    CHECK(generate_gnp(0, 0.5, 1).num_vertices() == 0);
    CHECK(generate_gnp(1, 1.0, 1).num_edges() == 0);
}

TEST_CASE("gnp rejects bad parameters") {
    CHECK_THROWS_AS(generate_gnp(5, -0.1, 1), ParameterError);
    CHECK_THROWS_AS(generate_gnp(5, 1.5, 1), ParameterError);
    CHECK_THROWS_AS(generate_gnp(5, std::nan(""), 1), ParameterError);
    CHECK_THROWS_AS(generate_gnp(-1, 0.5, 1), ParameterError);
}

TEST_CASE("gnp is a pure function of (n, p, seed)") {
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 0xdeadbeefULL}) {
        CHECK(generate_gnp(200, 0.05, seed) == generate_gnp(200, 0.05, seed));
    }
    CHECK_FALSE(generate_gnp(200, 0.05, 1) == generate_gnp(200, 0.05, 2));
}

TEST_CASE("gnp pair order is lexicographic with one draw per pair") {
    // Recreate the stream by hand and compare edge by edge.
    const int n = 30;
    const double p = 0.3;
    Rng rng(2024);
    std::vector<Edge> expected;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) expected.push_back({u, v});
    CHECK(generate_gnp(n, p, 2024).edges() == expected);
}

TEST_CASE("gnp edge count within 4 standard deviations at n = 10000, p = 0.5") {
    const double pairs = 10000.0 * 9999.0 / 2.0;  // 49 995 000
    const double mean = pairs * 0.5;
    const double sd = std::sqrt(pairs * 0.25);
    for (std::uint64_t seed : {11ULL, 12ULL}) {
        const auto m = static_cast<double>(generate_gnp(10000, 0.5, seed).num_edges());
        CHECK(std::abs(m - mean) <= 4 * sd);
    }
}

TEST_CASE("edge count of G(cn, d/n) concentrates within 1% at n = 2000") {
    const double c = 7.29, d = 5.14;
    const int n = 2000;
    const int vertices = static_cast<int>(std::floor(c * n + 1e-9));
    const double expected = vertices * (vertices - 1.0) / 2.0 * d / n;
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const auto m = static_cast<double>(generate_gnp(vertices, d / n, seed).num_edges());
        CHECK(std::abs(m - expected) <= 0.01 * expected);
        CHECK(m / n < 137.0);
    }
}

TEST_CASE("structured graphs") {
    CHECK(structured_graph(GraphKind::Complete, 4).num_edges() == 6);
    const auto path = structured_graph(GraphKind::Path, 5);
    CHECK(path.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const auto tri = structured_graph(GraphKind::Cycle, 3);
    CHECK(tri == structured_graph(GraphKind::Complete, 3));
    CHECK(structured_graph(GraphKind::Empty, 7).num_edges() == 0);
    CHECK_THROWS_AS(structured_graph(GraphKind::Cycle, 2), ParameterError);
    CHECK_THROWS_AS(parse_graph_kind("star"), ParameterError);
}

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ParameterError);
    const Graph g(4, {{2, 1}, {0, 3}});
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.edge_id(3, 0) == std::optional<std::size_t>{0});
}

TEST_CASE("adjacency and edge list agree") {
    const auto g = generate_gnp(60, 0.1, 5);
    std::size_t slots = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (int u : nb) CHECK(g.has_edge(u, v));
        slots += nb.size();
    }
    CHECK(slots == 2 * g.num_edges());
}

TEST_CASE("edges_between") {
    const auto k4 = structured_graph(GraphKind::Complete, 4);
    CHECK(edges_between(k4, {0, 1}, {2, 3}) == 4);
    CHECK(edges_between(structured_graph(GraphKind::Empty, 6), {0, 1, 2}, {3, 4}) == 0);
    CHECK(edges_between(structured_graph(GraphKind::Cycle, 8), {0, 1, 2}, {4, 5, 6}) == 0);
    CHECK(oracle::edges_between(structured_graph(GraphKind::Cycle, 8), {0, 1, 2}, {4, 5, 6}) == 0);
    CHECK_THROWS_AS(edges_between(k4, {0, 1}, {1, 2}), ParameterError);
    CHECK_THROWS_AS(edges_between(k4, {0}, {4}), ParameterError);
}

TEST_CASE("edges_between is symmetric, bounded by |S||T| and matches the edge-list count") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const int n = 5 + static_cast<int>(rng.below(20));
        const auto g = generate_gnp(n, rng.uniform01(), seed);
        auto perm = sample_subset(rng, n, n);
        for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        const auto cut1 = rng.below(n + 1);
        const auto cut2 = cut1 + rng.below(n - cut1 + 1);
        const std::vector<int> s(perm.begin(), perm.begin() + cut1);
        const std::vector<int> t(perm.begin() + cut1, perm.begin() + cut2);
        const auto st = edges_between(g, VertexSet(s), VertexSet(t));
        CHECK(st == edges_between(g, VertexSet(t), VertexSet(s)));
        CHECK(st <= s.size() * t.size());
        CHECK(st == oracle::edges_between(g, s, t));
    }
}

TEST_CASE("colored graph bookkeeping") {
    const auto k3 = structured_graph(GraphKind::Complete, 3);
    const ColoredGraph cg(k3, {EdgeColor::Blue, EdgeColor::Blue, EdgeColor::Red});
    CHECK(cg.color(0, 1) == EdgeColor::Blue);
    CHECK(cg.color(2, 1) == EdgeColor::Red);
    CHECK_FALSE(cg.color(0, 0).has_value());
    CHECK(cg.count(EdgeColor::Blue) == 2);
    CHECK(cg.color_class(EdgeColor::Red).edges() == std::vector<Edge>{{1, 2}});
    CHECK(edges_between(cg, EdgeColor::Blue, {1}, {0, 2}) == 1);
    CHECK_THROWS_AS(ColoredGraph(k3, {EdgeColor::Blue}), ParameterError);
    CHECK(complement(EdgeColor::Blue) == EdgeColor::Red);
    CHECK(complement(complement(EdgeColor::Red)) == EdgeColor::Red);
    for (int v = 0; v < 3; ++v) {
        auto nb = cg.graph().neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) CHECK(cg.slot_colors(v)[i] == cg.color(v, nb[i]));
    }
}

TEST_CASE("vertex sets") {
    const VertexSet a{5, 1, 3, 3};
    CHECK(a.members() == std::vector<int>{1, 3, 5});
    CHECK(a.lowest(2) == VertexSet{1, 3});
    CHECK(a.intersect(VertexSet{3, 4, 5}) == VertexSet{3, 5});
    CHECK(a.unite(VertexSet{2}) == VertexSet{1, 2, 3, 5});
    CHECK(a.disjoint(VertexSet{0, 2, 4}));
    CHECK_FALSE(a.disjoint(VertexSet{5}));
    CHECK(VertexSet::range(2, 5) == VertexSet{2, 3, 4});
    CHECK_THROWS_AS(a.mask(5), ParameterError);
}

TEST_CASE("edge-list files round trip") {
    std::stringstream buf;
    const auto k4 = structured_graph(GraphKind::Complete, 4);
    format_graph(buf, k4);
    CHECK(buf.str() == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(parse_graph(buf) == k4);

    std::stringstream unordered("4 2\n2 3\n\n0 1\n");
    CHECK(parse_graph(unordered) == Graph(4, {{0, 1}, {2, 3}}));

    const auto g = generate_gnp(40, 0.2, 3);
    const ColoredGraph cg(g, std::vector<EdgeColor>(g.num_edges(), EdgeColor::Red));
    std::stringstream cbuf;
    format_colored_graph(cbuf, cg);
    CHECK(parse_colored_graph(cbuf) == cg);
    cbuf.clear();
    cbuf.seekg(0);
    CHECK(std::holds_alternative<ColoredGraph>(parse_any_graph(cbuf)));
}

namespace {

std::size_t parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_graph(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("edge-list parse errors carry line numbers") {
    CHECK(parse_error_line("3 1\n0 0\n") == 2);        // self-loop
    CHECK(parse_error_line("3 1\n0 5\n") == 2);        // out of range
    CHECK(parse_error_line("3 2\n0 1\n0 1\n") == 3);   // duplicate
    CHECK(parse_error_line("3 1\n0 x\n") == 2);        // malformed
    CHECK(parse_error_line("3 1\n0 1 2\n") == 2);      // wrong field count
    CHECK(parse_error_line("3 1\n1 0\n") == 2);        // u < v required
    CHECK(parse_error_line("3\n") == 1);               // bad header
    CHECK(parse_error_line("3 2\n0 1\n") == 2);        // too few edges
    CHECK(parse_error_line("3 1\n0 1\n1 2\n") == 3);   // too many edges
    std::istringstream bad_color("3 1\n0 1 G\n");
    CHECK_THROWS_AS(parse_colored_graph(bad_color), ParseError);
}
