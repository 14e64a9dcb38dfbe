#include "ramsey/graph.hpp"

#include <algorithm>
#include <string>

#include "ramsey/errors.hpp"
#include "ramsey/random.hpp"

namespace ramsey {

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices), edges_(std::move(edges)) {
    if (n_ < 0) throw ParameterError("Graph: negative vertex count");
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw ParameterError("Graph: edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                 ") out of range");
        if (e.u == e.v) throw ParameterError("Graph: self-loop at " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    if (!std::is_sorted(edges_.begin(), edges_.end())) std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw ParameterError("Graph: duplicate edge (" + std::to_string(dup->u) + ", " +
                             std::to_string(dup->v) + ")");

    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    nbrs_.resize(offsets_[n_]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Lexicographic edge order makes every neighbor list come out sorted:
    // v receives its smaller neighbors (as the second endpoint) before any
    // larger one (as the first endpoint).
    for (const auto& e : edges_) {
        nbrs_[fill[e.u]++] = e.v;
        nbrs_[fill[e.v]++] = e.u;
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

std::optional<std::size_t> Graph::edge_id(Vertex u, Vertex v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
    const Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::edge_subgraph(const std::vector<bool>& keep) const {
    if (keep.size() != edges_.size()) throw ParameterError("edge_subgraph: mask size mismatch");
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (keep[i]) kept.push_back(edges_[i]);
    return Graph(n_, std::move(kept));
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
    VertexSet s;
    for (Vertex v = first; v < last; ++v) s.members_.push_back(v);
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::lowest(std::size_t count) const {
    VertexSet s;
    s.members_.assign(members_.begin(), members_.begin() + std::min(count, members_.size()));
    return s;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    VertexSet s;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(s.members_));
    return s;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    VertexSet s;
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(s.members_));
    return s;
}

bool VertexSet::disjoint(const VertexSet& other) const {
    auto a = begin();
    auto b = other.begin();
    while (a != end() && b != other.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a;
        else ++b;
    }
    return true;
}

std::vector<bool> VertexSet::mask(int n) const {
    std::vector<bool> m(static_cast<std::size_t>(std::max(n, 0)), false);
    for (Vertex v : members_) {
        if (v < 0 || v >= n) throw ParameterError("vertex " + std::to_string(v) + " outside [0, " +
                                                  std::to_string(n) + ")");
        m[v] = true;
    }
    return m;
}

char color_code(EdgeColor c) { return c == EdgeColor::Blue ? 'B' : 'R'; }

std::string_view color_name(EdgeColor c) { return c == EdgeColor::Blue ? "blue" : "red"; }

EdgeColor parse_color(std::string_view text) {
    if (text == "B" || text == "b" || text == "blue" || text == "Blue") return EdgeColor::Blue;
    if (text == "R" || text == "r" || text == "red" || text == "Red") return EdgeColor::Red;
    throw ParameterError("unknown color '" + std::string(text) + "'");
}

ColoredGraph::ColoredGraph(Graph graph, std::vector<EdgeColor> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
    if (colors_.size() != graph_.num_edges())
        throw ParameterError("ColoredGraph: need exactly one color per edge");
    slot_colors_.resize(graph_.num_slots());
    const auto& edges = graph_.edges();
    for (std::size_t id = 0; id < edges.size(); ++id) {
        const auto [u, v] = edges[id];
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            auto nb = graph_.neighbors(a);
            auto pos = static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), b) - nb.begin());
            slot_colors_[graph_.slot_offset(a) + pos] = colors_[id];
        }
    }
}

std::optional<EdgeColor> ColoredGraph::color(Vertex u, Vertex v) const {
    auto id = graph_.edge_id(u, v);
    if (!id) return std::nullopt;
    return colors_[*id];
}

Graph ColoredGraph::color_class(EdgeColor c) const {
    std::vector<bool> keep(colors_.size());
    for (std::size_t i = 0; i < colors_.size(); ++i) keep[i] = colors_[i] == c;
    return graph_.edge_subgraph(keep);
}

std::size_t ColoredGraph::count(EdgeColor c) const {
    return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), c));
}

Graph generate_gnp(int num_vertices, double edge_prob, std::uint64_t seed) {
    if (num_vertices < 0) throw ParameterError("generate_gnp: negative vertex count");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw ParameterError("generate_gnp: edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    const double pairs = 0.5 * num_vertices * (num_vertices - 1.0);
    edges.reserve(static_cast<std::size_t>(pairs * edge_prob * 1.01 + 16));
    for (Vertex u = 0; u < num_vertices; ++u)
        for (Vertex v = u + 1; v < num_vertices; ++v)
            if (rng.bernoulli(edge_prob)) edges.push_back({u, v});
    return Graph(num_vertices, std::move(edges));
}

GraphKind parse_graph_kind(std::string_view text) {
    if (text == "complete") return GraphKind::Complete;
    if (text == "path") return GraphKind::Path;
    if (text == "cycle") return GraphKind::Cycle;
    if (text == "empty") return GraphKind::Empty;
    throw ParameterError("unknown graph kind '" + std::string(text) + "'");
}

Graph structured_graph(GraphKind kind, int num_vertices) {
    if (num_vertices < 0) throw ParameterError("structured_graph: negative vertex count");
    std::vector<Edge> edges;
    switch (kind) {
        case GraphKind::Complete:
            for (Vertex u = 0; u < num_vertices; ++u)
                for (Vertex v = u + 1; v < num_vertices; ++v) edges.push_back({u, v});
            break;
        case GraphKind::Path:
            for (Vertex u = 0; u + 1 < num_vertices; ++u) edges.push_back({u, u + 1});
            break;
        case GraphKind::Cycle:
            if (num_vertices < 3) throw ParameterError("structured_graph: a cycle needs at least 3 vertices");
            for (Vertex u = 0; u + 1 < num_vertices; ++u) edges.push_back({u, u + 1});
            edges.push_back({0, num_vertices - 1});
            break;
        case GraphKind::Empty:
            break;
    }
    return Graph(num_vertices, std::move(edges));
}

namespace {

template <typename Accept>
std::size_t count_between(const Graph& g, const VertexSet& s, const VertexSet& t, Accept accept) {
    const auto in_s = s.mask(g.num_vertices());
    for (Vertex v : t)
        if (v < 0 || v >= g.num_vertices())
            throw ParameterError("edges_between: vertex " + std::to_string(v) + " out of range");
    if (!s.disjoint(t)) throw ParameterError("edges_between: sets must be disjoint");
    std::size_t count = 0;
    for (Vertex v : t) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            if (in_s[nb[i]] && accept(v, i)) ++count;
    }
    return count;
}

}  // namespace

std::size_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
    return count_between(g, s, t, [](Vertex, std::size_t) { return true; });
}

std::size_t edges_between(const ColoredGraph& cg, EdgeColor color, const VertexSet& s,
                          const VertexSet& t) {
    return count_between(cg.graph(), s, t,
                         [&](Vertex v, std::size_t i) { return cg.slot_colors(v)[i] == color; });
}

bool is_simple_path(const Graph& g, std::span<const Vertex> path) {
    std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()), false);
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Vertex v = path[i];
        if (v < 0 || v >= g.num_vertices() || seen[v]) return false;
        seen[v] = true;
        if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
    }
    return true;
}

bool is_mono_path(const ColoredGraph& cg, EdgeColor color, std::span<const Vertex> path) {
    if (!is_simple_path(cg.graph(), path)) return false;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (cg.color(path[i - 1], path[i]) != color) return false;
    return true;
}

}  // namespace ramsey
