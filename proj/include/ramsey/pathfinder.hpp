#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct PathResult {
    std::size_t vertex_count = 0;
    std::vector<Vertex> witness;
};

inline constexpr int kDefaultExactCutoff = 20;
inline constexpr int kMaxExactCutoff = 27;
inline constexpr std::size_t kDefaultArrowEdgeLimit = 25;

// Longest simple path (by vertex count) via dynamic programming over
// (vertex subset, endpoint) states. Throws SizeError when the graph has more
// than `cutoff` vertices; cutoff may be raised up to kMaxExactCutoff.
PathResult longest_path_exact(const Graph& g, int cutoff = kDefaultExactCutoff);

struct MonoPaths {
    PathResult blue;
    PathResult red;
    const PathResult& longest() const { return blue.vertex_count >= red.vertex_count ? blue : red; }
    const PathResult& of(EdgeColor c) const { return c == EdgeColor::Blue ? blue : red; }
};

MonoPaths longest_mono_path_exact(const ColoredGraph& cg, int cutoff = kDefaultExactCutoff);

// Longest path held by the separator process over a complete run. A valid
// lower bound on the longest path of that color.
PathResult longest_mono_path_lower_bound(const ColoredGraph& cg, EdgeColor color);

struct ArrowResult {
    bool arrows = false;
    // A coloring without a monochromatic path on the requested number of
    // vertices; set exactly when arrows is false.
    std::optional<ColoredGraph> refutation;
    std::size_t colorings_checked = 0;
};

// Decides g -> P_k by enumerating two-colorings of g's edges. The first edge
// is fixed Blue (swapping colors maps colorings onto each other), so 2^(m-1)
// colorings are examined. Throws SizeError when g has more than max_edges
// edges.
ArrowResult arrows_brute(const Graph& g, std::size_t path_vertices,
                         std::size_t max_edges = kDefaultArrowEdgeLimit);

}  // namespace ramsey
