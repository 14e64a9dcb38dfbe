#include "ramsey/separator.hpp"

#include <algorithm>
#include <cmath>

#include "ramsey/errors.hpp"

namespace ramsey {

SeparatorProcess::SeparatorProcess(const ColoredGraph& cg, EdgeColor color)
    : cg_(&cg),
      color_(color),
      place_(static_cast<std::size_t>(cg.num_vertices()), Place::Unexplored),
      cursor_(static_cast<std::size_t>(cg.num_vertices()), 0),
      unexplored_count_(static_cast<std::size_t>(cg.num_vertices())) {
    path_.reserve(place_.size());
    exhausted_.reserve(place_.size());
}

SeparatorProcess::Step SeparatorProcess::step() {
    if (done()) throw InvariantError("SeparatorProcess::step called after the process ended");
    ++steps_;
    if (path_.empty()) {
        while (place_[next_start_] != Place::Unexplored) ++next_start_;
        place_[next_start_] = Place::Path;
        path_.push_back(next_start_);
        --unexplored_count_;
        return Step::Start;
    }

    const Vertex tip = path_.back();
    const auto nbrs = cg_->graph().neighbors(tip);
    const auto colors = cg_->slot_colors(tip);
    auto& cur = cursor_[tip];
    while (cur < nbrs.size() && (colors[cur] != color_ || place_[nbrs[cur]] != Place::Unexplored)) ++cur;
    if (cur < nbrs.size()) {
        const Vertex next = nbrs[cur++];
        place_[next] = Place::Path;
        path_.push_back(next);
        --unexplored_count_;
        return Step::Extend;
    }

    path_.pop_back();
    place_[tip] = Place::Exhausted;
    exhausted_.push_back(tip);
    return Step::Retract;
}

VertexSet SeparatorProcess::unexplored_set() const {
    std::vector<Vertex> u;
    u.reserve(unexplored_count_);
    for (Vertex v = 0; v < static_cast<Vertex>(place_.size()); ++v)
        if (place_[v] == Place::Unexplored) u.push_back(v);
    return VertexSet(std::move(u));
}

std::optional<std::string> SeparatorProcess::check_invariants() const {
    const auto n = place_.size();
    std::size_t counts[3] = {0, 0, 0};
    for (auto p : place_) ++counts[static_cast<int>(p)];
    if (counts[0] != unexplored_count_ || counts[1] != path_.size() || counts[2] != exhausted_.size())
        return "P, U, W do not partition the vertex set";
    if (path_.size() + unexplored_count_ + exhausted_.size() != n) return "|P| + |U| + |W| != n";
    for (Vertex v : path_)
        if (place_[v] != Place::Path) return "path vertex not marked as on the path";
    for (Vertex v : exhausted_)
        if (place_[v] != Place::Exhausted) return "W vertex not marked as exhausted";
    if (!is_mono_path(*cg_, color_, path_)) return "P is not a simple path of the target color";
    const auto& edges = cg_->graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (cg_->color(i) != color_) continue;
        const auto a = place_[edges[i].u];
        const auto b = place_[edges[i].v];
        if ((a == Place::Unexplored && b == Place::Exhausted) || (a == Place::Exhausted && b == Place::Unexplored))
            return "target-color edge (" + std::to_string(edges[i].u) + ", " + std::to_string(edges[i].v) +
                   ") joins U and W";
    }
    if (steps_ > 2 * n) return "more than 2n steps";
    return std::nullopt;
}

SeparatorOutcome find_separator(const ColoredGraph& cg, EdgeColor color, std::size_t path_target,
                                std::size_t set_target) {
    if (path_target < 1) throw ParameterError("find_separator: path_target must be at least 1");
    SeparatorProcess proc(cg, color);
    std::vector<Snapshot> trace;
    trace.reserve(2 * static_cast<std::size_t>(cg.num_vertices()));

    auto certify = [&] {
        Separator sep{proc.unexplored_set().lowest(set_target), proc.exhausted_set().lowest(set_target),
                      std::move(trace)};
        if (edges_between(cg, color, sep.u_set, sep.w_set) != 0)
            throw InvariantError("find_separator: certificate has a target-color edge between U and W");
        return sep;
    };

    while (!proc.done()) {
        const auto kind = proc.step();
        trace.push_back(proc.snapshot());
        if (kind != SeparatorProcess::Step::Retract) {
            if (proc.path().size() >= path_target) return MonoPath{proc.path()};
        } else if (proc.unexplored_count() >= set_target && proc.exhausted().size() >= set_target) {
            return certify();
        }
    }
    // Only reachable without a single Retract when there are no vertices.
    if (set_target == 0) return certify();
    throw ExhaustionError("find_separator: process ended with no " + std::to_string(path_target) +
                          "-vertex " + std::string(color_name(color)) + " path and without two sets of size " +
                          std::to_string(set_target));
}

FullTrace full_trace(const ColoredGraph& cg, EdgeColor color, std::size_t path_target) {
    SeparatorProcess proc(cg, color);
    FullTrace out;
    out.trace.reserve(2 * static_cast<std::size_t>(cg.num_vertices()));
    std::size_t longest = 0;
    bool best_seen = false;
    while (!proc.done()) {
        const auto kind = proc.step();
        // The path is at a local maximum right before it retracts.
        if (kind == SeparatorProcess::Step::Retract && proc.path().size() + 1 > longest) {
            out.longest_path = proc.path();
            out.longest_path.push_back(proc.exhausted().back());
            longest = out.longest_path.size();
        }
        const auto snap = proc.snapshot();
        out.trace.push_back(snap);
        const auto balance = std::min(snap.unexplored, snap.exhausted);
        if (!best_seen || balance > out.best_balance) {
            out.best_balance = balance;
            out.best_step = out.trace.size() - 1;
            best_seen = true;
        }
        if (kind != SeparatorProcess::Step::Retract && proc.path().size() >= path_target) {
            out.reached_target = true;
            if (proc.path().size() > longest) out.longest_path = proc.path();
            break;
        }
    }
    return out;
}

namespace {

// floor() that forgives representation error: 300 * 7.29 must give 2187.
std::size_t floor_count(double x) {
    return x <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(x + 1e-9 * std::max(1.0, x)));
}

}  // namespace

std::size_t host_vertex_count(std::size_t n, double c) { return floor_count(static_cast<double>(n) * c); }

std::size_t separator_set_size(std::size_t n, double c) {
    return floor_count(static_cast<double>(n) * (c - 1.0) / 2.0);
}

std::size_t large_set_threshold(std::size_t n, double c) {
    if (c <= 3.0) throw ParameterError("large_set_threshold: c must exceed 3");
    return floor_count(static_cast<double>(n) * (c - 3.0) / 4.0);
}

}  // namespace ramsey
