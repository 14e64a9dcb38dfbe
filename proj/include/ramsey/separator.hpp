#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Sizes of (P, U, W) after one step of the process.
struct Snapshot {
    std::size_t path = 0;
    std::size_t unexplored = 0;
    std::size_t exhausted = 0;
    friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

// Depth-first growth of a single-color path.
//
// Every vertex starts in U. One step does exactly one of:
//   Start    P is empty: move the lowest-indexed vertex of U onto P.
//   Extend   move the lowest-indexed U-neighbor of P's last vertex, joined
//            by an edge of the target color, onto P.
//   Retract  the last vertex of P has no such neighbor: move it to W.
// Start and Extend shrink U by one, Retract grows W by one, so the process
// ends after exactly 2n steps with every vertex in W. A vertex enters W only
// when it has no target-color edge into U, and U never gains vertices, so no
// target-color edge ever joins U and W.
class SeparatorProcess {
public:
    enum class Step { Start, Extend, Retract };
    enum class Place : unsigned char { Unexplored, Path, Exhausted };

    // The ColoredGraph must outlive the process.
    SeparatorProcess(const ColoredGraph& cg, EdgeColor color);

    bool done() const { return path_.empty() && unexplored_count_ == 0; }
    // Precondition: !done().
    Step step();

    const std::vector<Vertex>& path() const { return path_; }
    const std::vector<Vertex>& exhausted() const { return exhausted_; }
    std::size_t unexplored_count() const { return unexplored_count_; }
    Place place(Vertex v) const { return place_[v]; }
    std::size_t step_count() const { return steps_; }
    Snapshot snapshot() const { return {path_.size(), unexplored_count_, exhausted_.size()}; }

    VertexSet unexplored_set() const;
    VertexSet exhausted_set() const { return VertexSet(exhausted_); }

    // Recomputes every state invariant from scratch by direct edge scan:
    // the partition, the path's color, and the absence of target-color edges
    // between U and W. Returns a description of the first violation.
    std::optional<std::string> check_invariants() const;

private:
    const ColoredGraph* cg_;
    EdgeColor color_;
    std::vector<Place> place_;
    // Per vertex, index of the next neighbor slot worth inspecting. Slots
    // behind the cursor point outside U or carry the wrong color, and stay
    // that way because U only shrinks.
    std::vector<std::size_t> cursor_;
    std::vector<Vertex> path_;
    std::vector<Vertex> exhausted_;
    std::size_t unexplored_count_ = 0;
    Vertex next_start_ = 0;
    std::size_t steps_ = 0;
};

struct MonoPath {
    std::vector<Vertex> vertices;
};

struct Separator {
    VertexSet u_set;
    VertexSet w_set;
    std::vector<Snapshot> trace;
};

using SeparatorOutcome = std::variant<MonoPath, Separator>;

// Runs the process until either P holds path_target vertices (MonoPath) or,
// at a Retract step, both |U| and |W| are at least set_target (Separator,
// both sets cut down to their set_target lowest vertices). The certificate is
// re-verified before returning. Throws ExhaustionError if the process ends
// with neither outcome; this cannot happen when the graph has
// c * path_target vertices, no target-color path on path_target vertices,
// and set_target <= path_target * (c - 1) / 2.
SeparatorOutcome find_separator(const ColoredGraph& cg, EdgeColor color, std::size_t path_target,
                                std::size_t set_target);

struct FullTrace {
    // trace[i] is the state after step i + 1.
    std::vector<Snapshot> trace;
    // Index into trace of the first state maximizing min(|U|, |W|).
    std::size_t best_step = 0;
    std::size_t best_balance = 0;
    // Longest path P held at any moment.
    std::vector<Vertex> longest_path;
    bool reached_target = false;
};

// Runs the process to completion, or until |P| = path_target.
FullTrace full_trace(const ColoredGraph& cg, EdgeColor color, std::size_t path_target);

// Floor of c*n, n(c-1)/2 and n(c-3)/4, tolerant of floating-point error.
std::size_t host_vertex_count(std::size_t n, double c);
std::size_t separator_set_size(std::size_t n, double c);
std::size_t large_set_threshold(std::size_t n, double c);

}  // namespace ramsey
