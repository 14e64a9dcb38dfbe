#include "ramsey/pathfinder.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "ramsey/errors.hpp"
#include "ramsey/separator.hpp"

namespace ramsey {

PathResult longest_path_exact(const Graph& g, int cutoff) {
    if (cutoff < 0 || cutoff > kMaxExactCutoff)
        throw ParameterError("longest_path_exact: cutoff must lie in [0, " + std::to_string(kMaxExactCutoff) + "]");
    const int n = g.num_vertices();
    if (n > cutoff)
        throw SizeError("longest_path_exact: " + std::to_string(n) + " vertices exceeds the exact cutoff of " +
                        std::to_string(cutoff) + "; use the separator lower bound instead");
    if (n == 0) return {};

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }

    // ends[mask] = set of v such that some path visits exactly `mask` and
    // ends at v. Masks only grow along transitions, so increasing numeric
    // order is a valid processing order.
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
    for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;

    std::uint32_t best_mask = 1;
    int best_size = 1;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        std::uint32_t e = ends[mask];
        if (e == 0) continue;
        const int size = std::popcount(mask);
        if (size > best_size) {
            best_size = size;
            best_mask = mask;
        }
        while (e) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = adj[v] & ~mask;
            while (ext) {
                const int u = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1u << u)] |= 1u << u;
            }
        }
        if (mask == full) break;
    }

    // Walk back: drop the current end, pick any adjacent end of the smaller set.
    PathResult out;
    std::uint32_t mask = best_mask;
    int v = std::countr_zero(ends[mask]);
    out.witness.push_back(v);
    while (std::popcount(mask) > 1) {
        const std::uint32_t rest = mask & ~(1u << v);
        const std::uint32_t prev = ends[rest] & adj[v];
        if (prev == 0) throw InvariantError("longest_path_exact: broken predecessor chain");
        v = std::countr_zero(prev);
        out.witness.push_back(v);
        mask = rest;
    }
    std::reverse(out.witness.begin(), out.witness.end());
    out.vertex_count = out.witness.size();
    return out;
}

MonoPaths longest_mono_path_exact(const ColoredGraph& cg, int cutoff) {
    return {longest_path_exact(cg.color_class(EdgeColor::Blue), cutoff),
            longest_path_exact(cg.color_class(EdgeColor::Red), cutoff)};
}

PathResult longest_mono_path_lower_bound(const ColoredGraph& cg, EdgeColor color) {
    auto run = full_trace(cg, color, static_cast<std::size_t>(cg.num_vertices()) + 1);
    return {run.longest_path.size(), std::move(run.longest_path)};
}

namespace {

// Small dense view of the non-isolated part of a graph, for repeated path
// searches under many colorings.
struct ArrowSearch {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // compressed endpoints
    std::vector<std::uint64_t> color_adj[2];
    std::size_t target = 0;

    bool path_from(const std::vector<std::uint64_t>& adj, int v, std::uint64_t used, std::size_t len) const {
        if (len >= target) return true;
        std::uint64_t ext = adj[v] & ~used;
        while (ext) {
            const int u = std::countr_zero(ext);
            ext &= ext - 1;
            if (path_from(adj, u, used | (std::uint64_t{1} << u), len + 1)) return true;
        }
        return false;
    }

    bool has_path(const std::vector<std::uint64_t>& adj) const {
        for (int v = 0; v < n; ++v)
            if (adj[v] && path_from(adj, v, std::uint64_t{1} << v, 1)) return true;
        return false;
    }

    // True when the coloring given by `blue_bits` (bit i set = edge i Blue)
    // contains a monochromatic path on `target` vertices.
    bool mono_path(std::uint64_t blue_bits) {
        for (auto& a : color_adj) a.assign(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto& adj = color_adj[(blue_bits >> i) & 1 ? 0 : 1];
            adj[edges[i].first] |= std::uint64_t{1} << edges[i].second;
            adj[edges[i].second] |= std::uint64_t{1} << edges[i].first;
        }
        return has_path(color_adj[0]) || has_path(color_adj[1]);
    }
};

}  // namespace

ArrowResult arrows_brute(const Graph& g, std::size_t path_vertices, std::size_t max_edges) {
    const std::size_t m = g.num_edges();
    if (m > max_edges)
        throw SizeError("arrows_brute: " + std::to_string(m) + " edges exceeds the enumeration limit of " +
                        std::to_string(max_edges));
    if (m > 40) throw SizeError("arrows_brute: more than 40 edges is not enumerable");

    ArrowResult result;
    auto coloring_from_bits = [&](std::uint64_t bits) {
        std::vector<EdgeColor> colors(m);
        for (std::size_t i = 0; i < m; ++i) colors[i] = (bits >> i) & 1 ? EdgeColor::Blue : EdgeColor::Red;
        return ColoredGraph(g, std::move(colors));
    };

    // Trivial path lengths: a single vertex is always monochromatic; beyond
    // that every monochromatic path uses at least one edge.
    if (path_vertices <= 1) {
        result.arrows = g.num_vertices() >= 1;
        if (!result.arrows) result.refutation = coloring_from_bits(0);
        return result;
    }

    ArrowSearch search;
    search.target = path_vertices;
    std::vector<int> index(static_cast<std::size_t>(g.num_vertices()), -1);
    for (const auto& e : g.edges()) {
        for (Vertex v : {e.u, e.v})
            if (index[v] < 0) index[v] = search.n++;
        search.edges.emplace_back(index[e.u], index[e.v]);
    }

    if (search.n > 64) throw SizeError("arrows_brute: more than 64 non-isolated vertices");
    if (m == 0) {
        result.arrows = false;
        result.refutation = coloring_from_bits(0);
        return result;
    }
    const std::uint64_t half = std::uint64_t{1} << (m - 1);
    // Edge 0 is always Blue: enumerate the remaining m-1 bits.
    for (std::uint64_t rest = 0; rest < half; ++rest) {
        const std::uint64_t bits = (rest << 1) | 1;
        ++result.colorings_checked;
        if (!search.mono_path(bits)) {
            result.arrows = false;
            result.refutation = coloring_from_bits(bits);
            return result;
        }
    }
    result.arrows = true;
    return result;
}

}  // namespace ramsey
