#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/separator.hpp"

namespace ramsey {

struct ProfileSizes {
    std::size_t x = 0, y = 0, x_prime = 0, y_prime = 0;

    // The four sums that the separator sizes bound from below.
    std::size_t min_sum() const;
};

// Intersections of a Blue separator (U, W) with a Red separator (U', W'):
//   X = U ∩ U',  Y = U ∩ W',  X' = W ∩ U',  Y' = W ∩ W'.
struct IntersectionProfile {
    VertexSet x, y, x_prime, y_prime;

    ProfileSizes sizes() const { return {x.size(), y.size(), x_prime.size(), y_prime.size()}; }
};

// Throws ParameterError if u and w, or u_prime and w_prime, overlap.
IntersectionProfile intersect_partitions(const VertexSet& u, const VertexSet& w, const VertexSet& u_prime,
                                         const VertexSet& w_prime);

enum class LargePair { XandYprime, YandXprime, Both, Neither };
std::string_view large_pair_name(LargePair p);

// Which diagonal pairs have both members of size >= threshold. When all four
// sums x+y, x'+y', x+x', y+y' are at least 2*threshold the answer is never
// Neither: two small sets on a common row or column would sum below it.
LargePair claim_large_pair(const ProfileSizes& sizes, std::size_t threshold);
inline LargePair claim_large_pair(const IntersectionProfile& p, std::size_t threshold) {
    return claim_large_pair(p.sizes(), threshold);
}

struct MonoPathFound {
    EdgeColor color = EdgeColor::Blue;
    std::vector<Vertex> path;
};

// Both separators exist, so the coloring has no monochromatic P_n on this
// graph, and the surviving pair has no edge of either color between its
// sets: the graph fails the expansion property at this set size.
struct ProofContradiction {
    VertexSet first;
    VertexSet second;
    std::size_t edge_count = 0;  // always 0; any edge would have no color
    std::size_t threshold = 0;   // size of each set
    LargePair pair = LargePair::XandYprime;
    ProfileSizes profile;
};

using ArrowVerdict = std::variant<MonoPathFound, ProofContradiction>;

// Follows the argument on one colored host graph with floor(c * n) vertices:
// a Blue and a Red separator with sets of size floor(n(c-1)/2), their four
// intersections, and the diagonal pair of size floor(n(c-3)/4) (one less
// when floor rounding of the separator sizes leaves the four sums one short
// of twice that). Throws InvariantError if a separator cannot be built or
// the final pair has an edge.
ArrowVerdict prove_arrow_instance(const ColoredGraph& cg, std::size_t path_vertices, double c);

}  // namespace ramsey
