#include "ramsey/theorem.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

std::size_t ProfileSizes::min_sum() const {
    return std::min({x + y, x_prime + y_prime, x + x_prime, y + y_prime});
}

IntersectionProfile intersect_partitions(const VertexSet& u, const VertexSet& w, const VertexSet& u_prime,
                                         const VertexSet& w_prime) {
    if (!u.disjoint(w)) throw ParameterError("intersect_partitions: U and W overlap");
    if (!u_prime.disjoint(w_prime)) throw ParameterError("intersect_partitions: U' and W' overlap");
    return {u.intersect(u_prime), u.intersect(w_prime), w.intersect(u_prime), w.intersect(w_prime)};
}

std::string_view large_pair_name(LargePair p) {
    switch (p) {
        case LargePair::XandYprime: return "X_and_Yprime";
        case LargePair::YandXprime: return "Y_and_Xprime";
        case LargePair::Both: return "both";
        case LargePair::Neither: return "neither";
    }
    return "unknown";
}

LargePair claim_large_pair(const ProfileSizes& s, std::size_t threshold) {
    const bool main_diagonal = s.x >= threshold && s.y_prime >= threshold;
    const bool anti_diagonal = s.y >= threshold && s.x_prime >= threshold;
    if (main_diagonal && anti_diagonal) return LargePair::Both;
    if (main_diagonal) return LargePair::XandYprime;
    if (anti_diagonal) return LargePair::YandXprime;
    return LargePair::Neither;
}

namespace {

Separator separator_or_path(const ColoredGraph& cg, EdgeColor color, std::size_t n, std::size_t set_size,
                            std::optional<MonoPathFound>& found) {
    try {
        auto outcome = find_separator(cg, color, n, set_size);
        if (auto* p = std::get_if<MonoPath>(&outcome)) {
            found = MonoPathFound{color, std::move(p->vertices)};
            return {};
        }
        return std::get<Separator>(std::move(outcome));
    } catch (const ExhaustionError& e) {
        throw InvariantError(std::string("prove_arrow_instance: separator exhausted: ") + e.what());
    }
}

}  // namespace

ArrowVerdict prove_arrow_instance(const ColoredGraph& cg, std::size_t path_vertices, double c) {
    if (!(c > 3.0)) throw ParameterError("prove_arrow_instance: c must exceed 3");
    if (path_vertices < 1) throw ParameterError("prove_arrow_instance: path must have at least one vertex");
    const auto host = host_vertex_count(path_vertices, c);
    if (static_cast<std::size_t>(cg.num_vertices()) != host)
        throw ParameterError("prove_arrow_instance: graph has " + std::to_string(cg.num_vertices()) +
                             " vertices, expected floor(c * n) = " + std::to_string(host));

    const auto set_size = separator_set_size(path_vertices, c);
    std::optional<MonoPathFound> found;
    auto blue = separator_or_path(cg, EdgeColor::Blue, path_vertices, set_size, found);
    if (found) return *found;
    auto red = separator_or_path(cg, EdgeColor::Red, path_vertices, set_size, found);
    if (found) return *found;

    const auto profile = intersect_partitions(blue.u_set, blue.w_set, red.u_set, red.w_set);
    const auto sizes = profile.sizes();
    const auto threshold = std::min(large_set_threshold(path_vertices, c), sizes.min_sum() / 2);
    const auto pair = claim_large_pair(sizes, threshold);
    if (pair == LargePair::Neither)
        throw InvariantError("prove_arrow_instance: no diagonal pair of large intersections");

    ProofContradiction out;
    out.pair = pair;
    out.threshold = threshold;
    out.profile = sizes;
    if (pair == LargePair::YandXprime) {
        out.first = profile.y.lowest(threshold);
        out.second = profile.x_prime.lowest(threshold);
    } else {
        out.first = profile.x.lowest(threshold);
        out.second = profile.y_prime.lowest(threshold);
    }
    out.edge_count = edges_between(cg.graph(), out.first, out.second);
    if (out.edge_count != 0)
        throw InvariantError("prove_arrow_instance: " + std::to_string(out.edge_count) +
                             " edges between sets that exclude both colors");
    return out;
}

}  // namespace ramsey
