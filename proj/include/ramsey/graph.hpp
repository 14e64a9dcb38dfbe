#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built.
//
// Edges are stored once, normalized to u < v and sorted lexicographically, so
// an edge's index in edges() is a stable edge id. Adjacency is kept in CSR
// form with every neighbor list sorted ascending.
class Graph {
public:
    Graph() = default;

    // Throws ParameterError on self-loops, duplicates or out-of-range
    // endpoints. Endpoint order within a pair is irrelevant.
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    // Position of neighbors(v)[0] in the flat adjacency array. Lets callers
    // keep per-slot data (e.g. colors) in a parallel array.
    std::size_t slot_offset(Vertex v) const { return offsets_[v]; }
    std::size_t num_slots() const { return nbrs_.size(); }

    bool has_edge(Vertex u, Vertex v) const;
    std::optional<std::size_t> edge_id(Vertex u, Vertex v) const;

    // Graph on the same vertex set keeping the edges whose id is selected.
    Graph edge_subgraph(const std::vector<bool>& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> nbrs_;
};

// Sorted, duplicate-free set of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
    explicit VertexSet(std::vector<Vertex> members);

    // {first, ..., last - 1}
    static VertexSet range(Vertex first, Vertex last);

    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    // The `count` smallest members.
    VertexSet lowest(std::size_t count) const;

    VertexSet intersect(const VertexSet& other) const;
    VertexSet unite(const VertexSet& other) const;
    bool disjoint(const VertexSet& other) const;

    // Membership bitmap of length n. Throws ParameterError if a member is
    // outside [0, n).
    std::vector<bool> mask(int n) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

enum class EdgeColor : std::uint8_t { Blue, Red };

constexpr EdgeColor complement(EdgeColor c) {
    return c == EdgeColor::Blue ? EdgeColor::Red : EdgeColor::Blue;
}
char color_code(EdgeColor c);                        // 'B' or 'R'
EdgeColor parse_color(std::string_view text);        // "B"/"R"/"blue"/"red"
std::string_view color_name(EdgeColor c);            // "blue" or "red"

// A graph together with a total two-coloring of its edges.
class ColoredGraph {
public:
    ColoredGraph() = default;
    // colors[i] is the color of graph.edges()[i].
    ColoredGraph(Graph graph, std::vector<EdgeColor> colors);

    const Graph& graph() const { return graph_; }
    int num_vertices() const { return graph_.num_vertices(); }
    const std::vector<EdgeColor>& colors() const { return colors_; }
    EdgeColor color(std::size_t edge_id) const { return colors_[edge_id]; }
    std::optional<EdgeColor> color(Vertex u, Vertex v) const;

    // Colors parallel to graph().neighbors(v).
    std::span<const EdgeColor> slot_colors(Vertex v) const {
        return {slot_colors_.data() + graph_.slot_offset(v), graph_.degree(v)};
    }

    // Same vertex set, only the edges of one color.
    Graph color_class(EdgeColor c) const;
    std::size_t count(EdgeColor c) const;

    friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
        return a.graph_ == b.graph_ && a.colors_ == b.colors_;
    }

private:
    Graph graph_;
    std::vector<EdgeColor> colors_;
    std::vector<EdgeColor> slot_colors_;
};

// G(n, p): every pair {u, v} is an edge independently with probability p.
// Pairs are visited in lexicographic order (0,1), (0,2), ..., (n-2,n-1) and
// each consumes exactly one draw of Rng(seed).uniform01(), so the result is a
// pure function of (n, p, seed).
Graph generate_gnp(int num_vertices, double edge_prob, std::uint64_t seed);

enum class GraphKind { Complete, Path, Cycle, Empty };
GraphKind parse_graph_kind(std::string_view text);
Graph structured_graph(GraphKind kind, int num_vertices);

// e(S, T): number of edges with one endpoint in s and the other in t. The
// sets must be disjoint and inside the vertex range.
std::size_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

// Same count restricted to edges of one color.
std::size_t edges_between(const ColoredGraph& cg, EdgeColor color, const VertexSet& s,
                          const VertexSet& t);

// Checks that `path` is a simple path in g (all consecutive pairs adjacent),
// optionally requiring every edge to have `color` in cg.
bool is_simple_path(const Graph& g, std::span<const Vertex> path);
bool is_mono_path(const ColoredGraph& cg, EdgeColor color, std::span<const Vertex> path);

}  // namespace ramsey
