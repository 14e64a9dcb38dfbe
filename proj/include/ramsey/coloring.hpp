#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "ramsey/graph.hpp"

namespace ramsey {

// Every edge Blue independently with probability blue_prob.
struct UniformRandom {
    double blue_prob = 0.5;
    std::uint64_t seed = 0;
};

// Gerencsér–Gyárfás style split: a random vertex set A of size
// round(small_part_fraction * n) (ties toward the smaller size), B = V \ A.
// Edges inside B are Blue, every other edge is Red. On K_n a Blue path stays
// inside B and a Red path must alternate through A, which caps both colors
// near 2n/3 when |A| = n/3.
struct SplitAdversary {
    double small_part_fraction = 1.0 / 3.0;
    std::uint64_t seed = 0;
};

struct Constant {
    EdgeColor color = EdgeColor::Blue;
};

using ColoringStrategy = std::variant<UniformRandom, SplitAdversary, Constant>;

// "random:q", "split:f", "const:B" / "const:R". The seed fills the strategy's
// seed field where it has one.
ColoringStrategy parse_strategy(std::string_view text, std::uint64_t seed = 0);
std::string strategy_name(const ColoringStrategy& s);

// Throws ParameterError for blue_prob outside [0, 1] or a fraction outside
// (0, 1).
void validate(const ColoringStrategy& s);

ColoredGraph apply_strategy(const Graph& g, const ColoringStrategy& strategy);

// |A| chosen by SplitAdversary on n vertices.
int split_small_part_size(double fraction, int n);

// The A side chosen by SplitAdversary for this (n, fraction, seed).
VertexSet split_small_part(const SplitAdversary& s, int n);

}  // namespace ramsey
