#include "ramsey/coloring.hpp"

#include <cmath>
#include <cstdio>

#include "ramsey/errors.hpp"
#include "ramsey/random.hpp"

namespace ramsey {
namespace {

double parse_real(std::string_view text, std::string_view what) {
    const std::string s(text);
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw ParameterError("strategy: bad " + std::string(what) + " '" + s + "'");
    return value;
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

}  // namespace

ColoringStrategy parse_strategy(std::string_view text, std::uint64_t seed) {
    const auto colon = text.find(':');
    const auto head = text.substr(0, colon);
    const auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    ColoringStrategy s;
    if (head == "random") {
        s = UniformRandom{arg.empty() ? 0.5 : parse_real(arg, "blue probability"), seed};
    } else if (head == "split") {
        s = SplitAdversary{arg.empty() ? 1.0 / 3.0 : parse_real(arg, "fraction"), seed};
    } else if (head == "const") {
        s = Constant{parse_color(arg)};
    } else {
        throw ParameterError("unknown strategy '" + std::string(text) +
                             "' (expected random:q, split:f, const:B or const:R)");
    }
    validate(s);
    return s;
}

std::string strategy_name(const ColoringStrategy& s) {
    if (auto r = std::get_if<UniformRandom>(&s)) return "random:" + format_real(r->blue_prob);
    if (auto a = std::get_if<SplitAdversary>(&s)) return "split:" + format_real(a->small_part_fraction);
    return std::string("const:") + color_code(std::get<Constant>(s).color);
}

void validate(const ColoringStrategy& s) {
    if (auto r = std::get_if<UniformRandom>(&s)) {
        if (!(r->blue_prob >= 0.0 && r->blue_prob <= 1.0))
            throw ParameterError("random strategy: blue probability must lie in [0, 1]");
    } else if (auto a = std::get_if<SplitAdversary>(&s)) {
        if (!(a->small_part_fraction > 0.0 && a->small_part_fraction < 1.0))
            throw ParameterError("split strategy: fraction must lie in (0, 1)");
    }
}

int split_small_part_size(double fraction, int n) {
    // Nearest integer, exact halves round down.
    return static_cast<int>(std::ceil(fraction * n - 0.5));
}

VertexSet split_small_part(const SplitAdversary& s, int n) {
    Rng rng(s.seed);
    return VertexSet(sample_subset(rng, n, split_small_part_size(s.small_part_fraction, n)));
}

ColoredGraph apply_strategy(const Graph& g, const ColoringStrategy& strategy) {
    validate(strategy);
    std::vector<EdgeColor> colors(g.num_edges());
    if (auto r = std::get_if<UniformRandom>(&strategy)) {
        Rng rng(r->seed);
        for (auto& c : colors) c = rng.bernoulli(r->blue_prob) ? EdgeColor::Blue : EdgeColor::Red;
    } else if (auto a = std::get_if<SplitAdversary>(&strategy)) {
        const auto in_a = split_small_part(*a, g.num_vertices()).mask(g.num_vertices());
        for (std::size_t i = 0; i < colors.size(); ++i) {
            const auto [u, v] = g.edges()[i];
            colors[i] = (!in_a[u] && !in_a[v]) ? EdgeColor::Blue : EdgeColor::Red;
        }
    } else {
        colors.assign(colors.size(), std::get<Constant>(strategy).color);
    }
    return ColoredGraph(g, std::move(colors));
}

}  // namespace ramsey
